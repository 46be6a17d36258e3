#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nss/errors.hpp"

namespace nss {

enum class Device { Muse, EGI, EGIReduced };
enum class Condition { Heard, Imagined };
enum class MarkerKind { StimulusOnset, StimulusEnd, ImagineStart, ImagineEnd };
enum class Scenario { IntraSession, InterSession, InterSubject };
enum class Scheme { BL, DNS, DNS3, HC };

const char* device_name(Device d);
Device device_from_name(const std::string& s);
const char* condition_name(Condition c);
Condition condition_from_name(const std::string& s);
const char* marker_kind_name(MarkerKind k);
MarkerKind marker_kind_from_name(const std::string& s);
const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& s);
const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& s);

// Frame-level class symbol: activity (S), merged non-speech (NS), the three
// non-speech subdivisions, or a concrete speech unit.
struct StateLabel {
  enum class Kind { S, NS, NsB, NsI, NsE, Unit };

  Kind kind{Kind::S};
  std::string unit;  // only for Kind::Unit

  static StateLabel s() { return {Kind::S, {}}; }
  static StateLabel ns() { return {Kind::NS, {}}; }
  static StateLabel ns_b() { return {Kind::NsB, {}}; }
  static StateLabel ns_i() { return {Kind::NsI, {}}; }
  static StateLabel ns_e() { return {Kind::NsE, {}}; }
  static StateLabel make_unit(std::string u) { return {Kind::Unit, std::move(u)}; }

  bool is_ns() const {
    return kind == Kind::NS || kind == Kind::NsB || kind == Kind::NsI || kind == Kind::NsE;
  }
  bool is_unit() const { return kind == Kind::Unit; }

  std::string str() const;
  static StateLabel parse(const std::string& s);

  bool operator==(const StateLabel& o) const { return kind == o.kind && unit == o.unit; }
  bool operator!=(const StateLabel& o) const { return !(*this == o); }
  bool operator<(const StateLabel& o) const {
    if (kind != o.kind) return kind < o.kind;
    return unit < o.unit;
  }
};

struct Marker {
  MarkerKind kind{MarkerKind::StimulusOnset};
  std::string phrase_id;
  int64_t sample_index{0};
};

struct Recording {
  std::string id;
  std::string subject_id;
  std::string session_id;
  Device device{Device::Muse};
  double sampling_rate_hz{0.0};
  std::vector<std::string> channel_names;
  Eigen::MatrixXd samples;  // n_channels x n_samples, microvolts
  std::vector<Marker> markers;

  Eigen::Index n_channels() const { return samples.rows(); }
  Eigen::Index n_samples() const { return samples.cols(); }

  // throws on invariant violation (channel counts, marker ordering, Nyquist)
  void validate() const;
};

struct Segment {
  std::string id;
  std::string recording_id;
  int64_t start_sample{0};
  int64_t end_sample{0};
  Condition condition{Condition::Heard};
  std::string phrase_id;
  std::string audio_path;  // stimulus audio, heard segments only
  std::string truth_path;  // synthetic ground-truth sidecar, optional

  int64_t length() const { return end_sample - start_sample; }
};

// Recording metadata as carried by the manifest; samples stay on disk until
// load_recording is called.
struct RecordingEntry {
  std::string id;
  std::string subject_id;
  std::string session_id;
  Device device{Device::Muse};
  double sampling_rate_hz{0.0};
  std::vector<std::string> channel_names;
  int64_t n_samples{0};
  std::string path;
  std::vector<Marker> markers;
};

struct DatasetManifest {
  std::vector<RecordingEntry> recordings;
  std::vector<Segment> segments;
  std::map<std::string, std::vector<std::string>> phrase_inventory;
  std::string root_dir;  // directory the manifest was loaded from; not serialized

  const RecordingEntry& recording(const std::string& id) const;
  const Segment& segment(const std::string& id) const;
  void validate() const;
};

struct Fold {
  std::set<std::string> train;
  std::set<std::string> test;
};

struct SplitSpec {
  Scenario scenario{Scenario::IntraSession};
  std::vector<Fold> folds;
};

}  // namespace nss
