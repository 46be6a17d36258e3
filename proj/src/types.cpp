#include "nss/types.hpp"

#include <algorithm>

namespace nss {

const char* device_name(Device d) {
  switch (d) {
    case Device::Muse: return "Muse";
    case Device::EGI: return "EGI";
    case Device::EGIReduced: return "EGIReduced";
  }
  return "?";
}

Device device_from_name(const std::string& s) {
  if (s == "Muse") return Device::Muse;
  if (s == "EGI") return Device::EGI;
  if (s == "EGIReduced") return Device::EGIReduced;
  throw NssError(ErrorCode::MalformedManifest, "unknown device '" + s + "'");
}

const char* condition_name(Condition c) {
  return c == Condition::Heard ? "Heard" : "Imagined";
}

Condition condition_from_name(const std::string& s) {
  if (s == "Heard") return Condition::Heard;
  if (s == "Imagined") return Condition::Imagined;
  throw NssError(ErrorCode::MalformedManifest, "unknown condition '" + s + "'");
}

const char* marker_kind_name(MarkerKind k) {
  switch (k) {
    case MarkerKind::StimulusOnset: return "StimulusOnset";
    case MarkerKind::StimulusEnd: return "StimulusEnd";
    case MarkerKind::ImagineStart: return "ImagineStart";
    case MarkerKind::ImagineEnd: return "ImagineEnd";
  }
  return "?";
}

MarkerKind marker_kind_from_name(const std::string& s) {
  if (s == "StimulusOnset") return MarkerKind::StimulusOnset;
  if (s == "StimulusEnd") return MarkerKind::StimulusEnd;
  if (s == "ImagineStart") return MarkerKind::ImagineStart;
  if (s == "ImagineEnd") return MarkerKind::ImagineEnd;
  throw NssError(ErrorCode::MalformedManifest, "unknown marker kind '" + s + "'");
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::IntraSession: return "IntraSession";
    case Scenario::InterSession: return "InterSession";
    case Scenario::InterSubject: return "InterSubject";
  }
  return "?";
}

Scenario scenario_from_name(const std::string& s) {
  if (s == "IntraSession") return Scenario::IntraSession;
  if (s == "InterSession") return Scenario::InterSession;
  if (s == "InterSubject") return Scenario::InterSubject;
  throw NssError(ErrorCode::InvalidConfig, "unknown scenario '" + s + "'");
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::BL: return "BL";
    case Scheme::DNS: return "DNS";
    case Scheme::DNS3: return "DNS3";
    case Scheme::HC: return "HC";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& s) {
  if (s == "BL") return Scheme::BL;
  if (s == "DNS") return Scheme::DNS;
  if (s == "DNS3") return Scheme::DNS3;
  if (s == "HC") return Scheme::HC;
  throw NssError(ErrorCode::InvalidConfig, "unknown scheme '" + s + "'");
}

std::string StateLabel::str() const {
  switch (kind) {
    case Kind::S: return "S";
    case Kind::NS: return "NS";
    case Kind::NsB: return "NS_b";
    case Kind::NsI: return "NS_i";
    case Kind::NsE: return "NS_e";
    case Kind::Unit: return "U:" + unit;
  }
  return "?";
}

StateLabel StateLabel::parse(const std::string& s) {
  if (s == "S") return StateLabel::s();
  if (s == "NS") return StateLabel::ns();
  if (s == "NS_b") return StateLabel::ns_b();
  if (s == "NS_i") return StateLabel::ns_i();
  if (s == "NS_e") return StateLabel::ns_e();
  if (s.rfind("U:", 0) == 0) return StateLabel::make_unit(s.substr(2));
  throw NssError(ErrorCode::MalformedFile, "unknown state label '" + s + "'");
}

void Recording::validate() const {
  if (static_cast<size_t>(n_channels()) != channel_names.size())
    throw NssError(ErrorCode::ChannelCountMismatch,
                   "recording '" + id + "': " + std::to_string(n_channels()) +
                       " sample rows vs " + std::to_string(channel_names.size()) +
                       " channel names");
  const auto require_channels = [&](size_t n) {
    if (channel_names.size() != n)
      throw NssError(ErrorCode::ChannelCountMismatch,
                     "recording '" + id + "': device " + device_name(device) +
                         " requires " + std::to_string(n) + " channels, got " +
                         std::to_string(channel_names.size()));
  };
  if (device == Device::Muse) {
    require_channels(4);
    for (const char* name : {"Fp1", "Fp2", "TP9", "TP10"}) {
      if (std::find(channel_names.begin(), channel_names.end(), name) == channel_names.end())
        throw NssError(ErrorCode::ChannelCountMismatch,
                       "recording '" + id + "': Muse channel set must contain " +
                           std::string(name));
    }
  } else if (device == Device::EGI) {
    require_channels(128);
  } else {
    require_channels(4);
  }
  if (sampling_rate_hz <= 2.0 * 60.0)
    throw NssError(ErrorCode::MalformedManifest,
                   "recording '" + id + "': sampling rate " +
                       std::to_string(sampling_rate_hz) +
                       " too low for the 60 Hz passband edge");
  int64_t prev = -1;
  for (const auto& m : markers) {
    if (m.sample_index < prev)
      throw NssError(ErrorCode::MalformedManifest,
                     "recording '" + id + "': markers not sorted by sample index");
    if (m.sample_index >= n_samples())
      throw NssError(ErrorCode::MalformedManifest,
                     "recording '" + id + "': marker beyond end of data");
    prev = m.sample_index;
  }
}

const RecordingEntry& DatasetManifest::recording(const std::string& rid) const {
  for (const auto& r : recordings)
    if (r.id == rid) return r;
  throw NssError(ErrorCode::MalformedManifest, "no recording with id '" + rid + "'");
}

const Segment& DatasetManifest::segment(const std::string& sid) const {
  for (const auto& s : segments)
    if (s.id == sid) return s;
  throw NssError(ErrorCode::UnknownSegment, "no segment with id '" + sid + "'");
}

void DatasetManifest::validate() const {
  for (const auto& [phrase, units] : phrase_inventory) {
    if (units.empty())
      throw NssError(ErrorCode::MalformedManifest,
                     "phrase '" + phrase + "' has an empty unit sequence");
  }
  for (const auto& s : segments) {
    if (!phrase_inventory.count(s.phrase_id))
      throw NssError(ErrorCode::MalformedManifest,
                     "segment '" + s.id + "' references unknown phrase '" + s.phrase_id + "'");
    const auto& rec = recording(s.recording_id);
    if (s.start_sample < 0 || s.start_sample >= s.end_sample || s.end_sample > rec.n_samples)
      throw NssError(ErrorCode::MalformedManifest,
                     "segment '" + s.id + "' has out-of-range sample bounds");
  }
  std::set<std::string> seen;
  for (const auto& s : segments) {
    if (!seen.insert(s.id).second)
      throw NssError(ErrorCode::MalformedManifest, "duplicate segment id '" + s.id + "'");
  }
}

}  // namespace nss
