#pragma once

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "warpiso/canonical_json.hpp"
#include "warpiso/errors.hpp"
#include "warpiso/profiles.hpp"

#include <json.hpp>

namespace warpiso {

inline const char* profile_kind_name(ProfileKind k) {
  switch (k) {
    case ProfileKind::TotallyGeodesic: return "totally_geodesic";
    case ProfileKind::Foliation: return "foliation";
    case ProfileKind::External: return "external";
  }
  return "external";
}

inline ProfileKind profile_kind_from_name(const std::string& s) {
  if (s == "totally_geodesic") return ProfileKind::TotallyGeodesic;
  if (s == "foliation") return ProfileKind::Foliation;
  if (s == "external") return ProfileKind::External;
  throw domain_error("unknown profile kind '" + s + "'");
}

// CSV curve format: header line "V,A", then one "volume,area" row per
// sample, LF line endings, values readable by strtod.
inline void write_profile_csv(const ProfileCurve& curve, std::ostream& out) {
  curve.validate();
  out << "V,A\n";
  char buf[96];
  for (const auto& [v, a] : curve.samples) {
    std::snprintf(buf, sizeof(buf), "%.15g,%.15g\n", v, a);
    out << buf;
  }
}

inline ProfileCurve read_profile_csv(std::istream& in,
                                     ProfileKind kind = ProfileKind::External) {
  std::string line;
  if (!std::getline(in, line)) throw domain_error("profile CSV is empty");
  if (line.find('\r') != std::string::npos) {
    throw domain_error("profile CSV must use LF line endings (found CR)");
  }
  if (line != "V,A") {
    throw domain_error("profile CSV must start with the header 'V,A', got '" + line + "'");
  }
  ProfileCurve curve;
  curve.kind = kind;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find('\r') != std::string::npos) {
      throw domain_error("profile CSV must use LF line endings (found CR at row " +
                         std::to_string(row) + ")");
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw domain_error("profile CSV row " + std::to_string(row) + " has no comma");
    }
    char* end = nullptr;
    const std::string vs = line.substr(0, comma);
    const std::string as = line.substr(comma + 1);
    const double v = std::strtod(vs.c_str(), &end);
    if (end == vs.c_str() || *end != '\0') {
      throw domain_error("profile CSV row " + std::to_string(row) + ": bad volume '" +
                         vs + "'");
    }
    const double a = std::strtod(as.c_str(), &end);
    if (end == as.c_str() || *end != '\0') {
      throw domain_error("profile CSV row " + std::to_string(row) + ": bad area '" + as +
                         "'");
    }
    curve.samples.emplace_back(v, a);
  }
  curve.validate();
  return curve;
}

// JSON mirror of the CSV format: {"kind": ..., "samples": [[V, A], ...],
// "schema": 1}, emitted canonically (sorted keys, 15 significant digits).
inline std::string write_profile_json(const ProfileCurve& curve) {
  curve.validate();
  auto samples = CanonicalJson::array();
  for (const auto& [v, a] : curve.samples) {
    auto pair = CanonicalJson::array();
    pair.push(CanonicalJson::number(v));
    pair.push(CanonicalJson::number(a));
    samples.push(std::move(pair));
  }
  auto root = CanonicalJson::object();
  root.set("kind", CanonicalJson::string(profile_kind_name(curve.kind)));
  root.set("samples", std::move(samples));
  root.set("schema", CanonicalJson::integer(1));
  return root.dump() + "\n";
}

inline ProfileCurve read_profile_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("profile JSON is malformed: ") + e.what());
  }
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) {
    throw domain_error("profile JSON needs an object with a 'samples' array");
  }
  ProfileCurve curve;
  curve.kind = j.contains("kind") ? profile_kind_from_name(j["kind"].get<std::string>())
                                  : ProfileKind::External;
  for (const auto& pair : j["samples"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw domain_error("profile JSON samples must be [V, A] number pairs");
    }
    curve.samples.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  curve.validate();
  return curve;
}

inline ProfileCurve read_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open profile file '" + path + "'");
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    return read_profile_json(in);
  }
  return read_profile_csv(in);
}

}  // namespace warpiso
