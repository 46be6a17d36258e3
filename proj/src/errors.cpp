#include "nss/errors.hpp"

namespace nss {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedManifest: return "MalformedManifest";
    case ErrorCode::MissingRecordingFile: return "MissingRecordingFile";
    case ErrorCode::ChannelCountMismatch: return "ChannelCountMismatch";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::UnpairedMarker: return "UnpairedMarker";
    case ErrorCode::UnknownSegment: return "UnknownSegment";
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::InvalidBand: return "InvalidBand";
    case ErrorCode::UnstableDesign: return "UnstableDesign";
    case ErrorCode::SignalTooShort: return "SignalTooShort";
    case ErrorCode::TooShortForSpectrum: return "TooShortForSpectrum";
    case ErrorCode::TooManyBadChannels: return "TooManyBadChannels";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::UnitIntervalMismatch: return "UnitIntervalMismatch";
    case ErrorCode::TooFewFrames: return "TooFewFrames";
    case ErrorCode::NoDataForClass: return "NoDataForClass";
    case ErrorCode::NumericalUnderflow: return "NumericalUnderflow";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NoSurvivingPath: return "NoSurvivingPath";
    case ErrorCode::ChainTooLong: return "ChainTooLong";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace nss
