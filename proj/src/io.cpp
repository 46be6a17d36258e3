#include "nss/io.hpp"

#include <nlohmann/json.hpp>

#include <cstring>
#include <fstream>

namespace nss {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'E', 'E', 'G', 'R'};
constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& os, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, uint64_t v) {
  put_u32(os, static_cast<uint32_t>(v));
  put_u32(os, static_cast<uint32_t>(v >> 32));
}

void put_f64(std::ostream& os, double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(os, bits);
}

void put_f32(std::ostream& os, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(os, bits);
}

uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | static_cast<uint32_t>(b[1]) << 8 |
         static_cast<uint32_t>(b[2]) << 16 | static_cast<uint32_t>(b[3]) << 24;
}

uint64_t get_u64(std::istream& is) {
  uint64_t lo = get_u32(is);
  uint64_t hi = get_u32(is);
  return lo | hi << 32;
}

double get_f64(std::istream& is) {
  uint64_t bits = get_u64(is);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

float get_f32(std::istream& is) {
  uint32_t bits = get_u32(is);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

json marker_to_json(const Marker& m) {
  return json{{"kind", marker_kind_name(m.kind)},
              {"phrase", m.phrase_id},
              {"sample", m.sample_index}};
}

Marker marker_from_json(const json& j) {
  Marker m;
  m.kind = marker_kind_from_name(j.at("kind").get<std::string>());
  m.phrase_id = j.at("phrase").get<std::string>();
  m.sample_index = j.at("sample").get<int64_t>();
  return m;
}

}  // namespace

void save_recording(const Recording& rec, const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw NssError(ErrorCode::MalformedFile, "cannot open for write: " + path.string());
  os.write(kMagic, 4);
  put_u32(os, kVersion);
  put_f64(os, rec.sampling_rate_hz);
  put_u32(os, static_cast<uint32_t>(rec.n_channels()));
  put_u64(os, static_cast<uint64_t>(rec.n_samples()));
  for (const auto& name : rec.channel_names) {
    put_u32(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
  for (Eigen::Index c = 0; c < rec.n_channels(); ++c)
    for (Eigen::Index t = 0; t < rec.n_samples(); ++t)
      put_f32(os, static_cast<float>(rec.samples(c, t)));
  if (!os) throw NssError(ErrorCode::MalformedFile, "write failed: " + path.string());
}

Recording load_recording(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw NssError(ErrorCode::MissingRecordingFile, path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw NssError(ErrorCode::MalformedFile, "bad magic in " + path.string());
  const uint32_t version = get_u32(is);
  if (version != kVersion)
    throw NssError(ErrorCode::MalformedFile,
                   "unsupported container version " + std::to_string(version));
  Recording rec;
  rec.sampling_rate_hz = get_f64(is);
  const uint32_t n_channels = get_u32(is);
  const uint64_t n_samples = get_u64(is);
  rec.channel_names.resize(n_channels);
  for (auto& name : rec.channel_names) {
    const uint32_t len = get_u32(is);
    if (len > 4096) throw NssError(ErrorCode::MalformedFile, "channel name too long");
    name.resize(len);
    is.read(name.data(), len);
  }
  rec.samples.resize(n_channels, static_cast<Eigen::Index>(n_samples));
  for (uint32_t c = 0; c < n_channels; ++c)
    for (uint64_t t = 0; t < n_samples; ++t)
      rec.samples(c, static_cast<Eigen::Index>(t)) = get_f32(is);
  if (!is) throw NssError(ErrorCode::MalformedFile, "truncated recording: " + path.string());
  return rec;
}

Recording load_recording(const DatasetManifest& manifest, const std::string& recording_id) {
  const RecordingEntry& entry = manifest.recording(recording_id);
  fs::path path = entry.path;
  if (path.is_relative() && !manifest.root_dir.empty()) path = fs::path(manifest.root_dir) / path;
  Recording rec = load_recording(path);
  rec.id = entry.id;
  rec.subject_id = entry.subject_id;
  rec.session_id = entry.session_id;
  rec.device = entry.device;
  rec.markers = entry.markers;
  if (rec.sampling_rate_hz != entry.sampling_rate_hz)
    throw NssError(ErrorCode::MalformedManifest,
                   "recording '" + entry.id + "': manifest sampling rate disagrees with file");
  if (rec.channel_names != entry.channel_names)
    throw NssError(ErrorCode::ChannelCountMismatch,
                   "recording '" + entry.id + "': manifest channel list disagrees with file");
  rec.validate();
  return rec;
}

DatasetManifest load_manifest(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw NssError(ErrorCode::MalformedManifest, "cannot open " + path.string());
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw NssError(ErrorCode::MalformedManifest, e.what());
  }
  DatasetManifest m;
  m.root_dir = path.parent_path().string();
  try {
    for (const auto& jr : j.at("recordings")) {
      RecordingEntry e;
      e.id = jr.at("id").get<std::string>();
      e.subject_id = jr.at("subject").get<std::string>();
      e.session_id = jr.at("session").get<std::string>();
      e.device = device_from_name(jr.at("device").get<std::string>());
      e.sampling_rate_hz = jr.at("fs").get<double>();
      e.channel_names = jr.at("channels").get<std::vector<std::string>>();
      e.n_samples = jr.at("samples").get<int64_t>();
      e.path = jr.at("path").get<std::string>();
      if (jr.contains("markers"))
        for (const auto& jm : jr.at("markers")) e.markers.push_back(marker_from_json(jm));
      m.recordings.push_back(std::move(e));
    }
    for (const auto& js : j.at("segments")) {
      Segment s;
      s.id = js.at("id").get<std::string>();
      s.recording_id = js.at("recording").get<std::string>();
      s.start_sample = js.at("start").get<int64_t>();
      s.end_sample = js.at("end").get<int64_t>();
      s.condition = condition_from_name(js.at("condition").get<std::string>());
      s.phrase_id = js.at("phrase").get<std::string>();
      if (js.contains("audio")) s.audio_path = js.at("audio").get<std::string>();
      if (js.contains("truth")) s.truth_path = js.at("truth").get<std::string>();
      m.segments.push_back(std::move(s));
    }
    for (const auto& [phrase, units] : j.at("phrases").items())
      m.phrase_inventory[phrase] = units.get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw NssError(ErrorCode::MalformedManifest, e.what());
  }

  // device channel-count invariants hold at the metadata level too
  for (const auto& e : m.recordings) {
    const size_t expected = e.device == Device::EGI ? 128 : 4;
    if (e.channel_names.size() != expected)
      throw NssError(ErrorCode::ChannelCountMismatch,
                     "recording '" + e.id + "': device " + device_name(e.device) + " declares " +
                         std::to_string(e.channel_names.size()) + " channels");
  }
  m.validate();
  for (const auto& e : m.recordings) {
    fs::path p = e.path;
    if (p.is_relative()) p = fs::path(m.root_dir) / p;
    if (!fs::exists(p)) throw NssError(ErrorCode::MissingRecordingFile, p.string());
  }
  return m;
}

void save_manifest(const DatasetManifest& m, const fs::path& path) {
  json j;
  j["version"] = 1;
  j["recordings"] = json::array();
  for (const auto& e : m.recordings) {
    json jr{{"id", e.id},           {"subject", e.subject_id}, {"session", e.session_id},
            {"device", device_name(e.device)}, {"fs", e.sampling_rate_hz},
            {"channels", e.channel_names},     {"samples", e.n_samples},
            {"path", e.path}};
    jr["markers"] = json::array();
    for (const auto& mk : e.markers) jr["markers"].push_back(marker_to_json(mk));
    j["recordings"].push_back(std::move(jr));
  }
  j["segments"] = json::array();
  for (const auto& s : m.segments) {
    json js{{"id", s.id},
            {"recording", s.recording_id},
            {"start", s.start_sample},
            {"end", s.end_sample},
            {"condition", condition_name(s.condition)},
            {"phrase", s.phrase_id}};
    if (!s.audio_path.empty()) js["audio"] = s.audio_path;
    if (!s.truth_path.empty()) js["truth"] = s.truth_path;
    j["segments"].push_back(std::move(js));
  }
  j["phrases"] = json::object();
  for (const auto& [phrase, units] : m.phrase_inventory) j["phrases"][phrase] = units;
  std::ofstream os(path);
  if (!os) throw NssError(ErrorCode::MalformedFile, "cannot open for write: " + path.string());
  os << j.dump(2) << "\n";
}

SplitSpec load_splits(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw NssError(ErrorCode::MalformedFile, "cannot open " + path.string());
  json j;
  try {
    is >> j;
    SplitSpec s;
    s.scenario = scenario_from_name(j.at("scenario").get<std::string>());
    for (const auto& jf : j.at("folds")) {
      Fold f;
      for (const auto& id : jf.at("train")) f.train.insert(id.get<std::string>());
      for (const auto& id : jf.at("test")) f.test.insert(id.get<std::string>());
      s.folds.push_back(std::move(f));
    }
    return s;
  } catch (const json::exception& e) {
    throw NssError(ErrorCode::MalformedFile, e.what());
  }
}

void save_splits(const SplitSpec& splits, const fs::path& path) {
  json j;
  j["scenario"] = scenario_name(splits.scenario);
  j["folds"] = json::array();
  for (const auto& f : splits.folds) {
    json jf;
    jf["train"] = std::vector<std::string>(f.train.begin(), f.train.end());
    jf["test"] = std::vector<std::string>(f.test.begin(), f.test.end());
    j["folds"].push_back(std::move(jf));
  }
  std::ofstream os(path);
  if (!os) throw NssError(ErrorCode::MalformedFile, "cannot open for write: " + path.string());
  os << j.dump(2) << "\n";
}

uint64_t hash_bytes(const void* data, size_t n, uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t hash_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw NssError(ErrorCode::MalformedFile, "cannot open " + path.string());
  uint64_t h = 1469598103934665603ULL;
  char buf[1 << 16];
  while (is) {
    is.read(buf, sizeof(buf));
    h = hash_bytes(buf, static_cast<size_t>(is.gcount()), h);
  }
  return h;
}

}  // namespace nss
