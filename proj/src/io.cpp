#include "fourgen/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fourgen {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// next content line, comments and blanks skipped
bool next_line(std::istream& in, std::string& out) {
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line = line.substr(0, pos);
    line = strip(line);
    if (!line.empty()) {
      out = line;
      return true;
    }
  }
  return false;
}

}  // namespace

PointSet load_pointset(std::istream& in) {
  std::string magic;
  std::getline(in, magic);
  if (strip(magic) != "# fourgen pointset v1")
    throw PointSetParseError(PointSetError::MalformedHeader, "missing '# fourgen pointset v1' line");

  std::string line;
  if (!next_line(in, line))
    throw PointSetParseError(PointSetError::MalformedHeader, "missing field line");
  uint32_t p = 0, k = 0;
  long long modulus = -1;
  {
    std::istringstream ss(line);
    std::string tag, kv;
    ss >> tag;
    if (tag != "field")
      throw PointSetParseError(PointSetError::MalformedHeader, "expected 'field p=.. k=.. modulus=..'");
    while (ss >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw PointSetParseError(PointSetError::MalformedHeader, "malformed field attribute: " + kv);
      std::string key = kv.substr(0, eq);
      long long val = 0;
      try {
        val = std::stoll(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw PointSetParseError(PointSetError::MalformedHeader, "non-numeric field attribute: " + kv);
      }
      if (key == "p") p = (uint32_t)val;
      else if (key == "k") k = (uint32_t)val;
      else if (key == "modulus") modulus = val;
      else throw PointSetParseError(PointSetError::MalformedHeader, "unknown field attribute: " + key);
    }
  }
  if (p == 0 || k == 0 || modulus < 0)
    throw PointSetParseError(PointSetError::MalformedHeader, "incomplete field line");

  if (!next_line(in, line) || line.rfind("n=", 0) != 0)
    throw PointSetParseError(PointSetError::MalformedHeader, "missing 'n=<dim>' line");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw PointSetParseError(PointSetError::MalformedHeader, "bad dimension line");
  }

  FieldPtr F;
  try {
    F = Field::make(p, k, (uint32_t)modulus);
  } catch (const std::exception& e) {
    throw PointSetParseError(PointSetError::MalformedHeader, std::string("bad field: ") + e.what());
  }

  PointSet x;
  try {
    x.space = ProjSpace(n, F);
  } catch (const std::exception& e) {
    throw PointSetParseError(PointSetError::MalformedHeader, std::string("bad space: ") + e.what());
  }
  while (next_line(in, line)) {
    std::istringstream ss(line);
    std::vector<Elem> coords;
    long long v;
    while (ss >> v) {
      if (v < 0 || (uint64_t)v >= F->q())
        throw PointSetParseError(PointSetError::OutOfRangeElement,
                                 "element out of range on line: " + line);
      coords.push_back((Elem)v);
    }
    if (!ss.eof())
      throw PointSetParseError(PointSetError::BadPoint, "non-numeric point line: " + line);
    if ((int)coords.size() != n + 1)
      throw PointSetParseError(PointSetError::BadPoint, "wrong coordinate count on line: " + line);
    bool zero = true;
    for (Elem e : coords)
      if (e) zero = false;
    if (zero) throw PointSetParseError(PointSetError::BadPoint, "zero tuple is not a point");
    if (!x.try_add(std::move(coords)))
      throw PointSetParseError(PointSetError::DuplicatePoint, "duplicate point on line: " + line);
  }
  return x;
}

PointSet load_pointset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PointSetParseError(PointSetError::MalformedHeader, "cannot open " + path);
  return load_pointset(in);
}

void save_pointset(const PointSet& x, std::ostream& out) {
  out << "# fourgen pointset v1\n";
  out << x.space.field->header_line() << "\n";
  out << "n=" << x.space.n << "\n";
  for (const auto& p : x.points) {
    for (size_t i = 0; i < p.coords.size(); ++i) out << (i ? " " : "") << p.coords[i];
    out << "\n";
  }
}

void save_pointset_file(const PointSet& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save_pointset(x, out);
}

std::string verify_report_json(const VerifyReport& rep) {
  nlohmann::json j;
  j["size"] = rep.size;
  j["spans"] = rep.spans_space;
  j["cap"] = rep.is_cap;
  j["four_general"] = rep.is_4general;
  if (rep.is_complete.has_value()) j["complete"] = *rep.is_complete;
  else j["complete"] = nullptr;
  if (rep.covered_count.has_value()) j["covered"] = *rep.covered_count;
  else j["covered"] = nullptr;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"kind", v.kind}, {"points", v.points}});
  return j.dump(2);
}

std::string code_params_json(const CodeParams& cp) {
  nlohmann::json j;
  j["N"] = cp.length;
  j["k"] = cp.dimension;
  j["d"] = cp.min_distance;
  j["rho"] = cp.covering_radius;
  j["q"] = cp.q;
  j["exceptions"] = cp.exception;
  return j.dump(2);
}

}  // namespace fourgen
