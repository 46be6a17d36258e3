#pragma once

#include <stdexcept>
#include <string>

namespace nss {

enum class ErrorCode {
  // manifests / recordings
  MalformedManifest,
  MissingRecordingFile,
  ChannelCountMismatch,
  InsufficientData,
  UnpairedMarker,
  UnknownSegment,
  MalformedFile,
  // filters / preprocessing
  InvalidBand,
  UnstableDesign,
  SignalTooShort,
  TooShortForSpectrum,
  TooManyBadChannels,
  ConvergenceFailure,
  RankDeficient,
  // framing / labels
  TooShort,
  UnitIntervalMismatch,
  TooFewFrames,
  // models / decoding
  NoDataForClass,
  NumericalUnderflow,
  DimMismatch,
  EmptyGraph,
  NoSurvivingPath,
  ChainTooLong,
  SchemeMismatch,
  EmptyClass,
  // config
  InvalidConfig,
};

const char* error_code_name(ErrorCode code);

// All recoverable failures surface as NssError carrying a stable code so the
// CLI can map them onto exit codes and tests can assert exact contracts.
class NssError : public std::runtime_error {
public:
  NssError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace nss
