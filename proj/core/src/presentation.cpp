#include "artin/presentation.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace artin {

CoxeterPresentation::CoxeterPresentation(int n, std::vector<std::vector<int>> matrix,
                                         std::string name)
    : n_(n), m_(std::move(matrix)), name_(std::move(name)) {
  if (n_ < 1) throw Error(ErrorKind::InvalidPresentation, "generator count must be >= 1");
  if (n_ > 127) throw Error(ErrorKind::InvalidPresentation, "at most 127 generators supported");
  if (m_.size() != static_cast<std::size_t>(n_))
    throw Error(ErrorKind::InvalidPresentation, "matrix must have n rows");
  for (const auto& row : m_)
    if (row.size() != static_cast<std::size_t>(n_))
      throw Error(ErrorKind::InvalidPresentation, "matrix must have n columns");
  for (int i = 1; i <= n_; ++i) {
    if (label(i, i) != 1)
      throw Error(ErrorKind::InvalidPresentation, "diagonal entries must be 1");
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      int m = label(i, j);
      if (m != label(j, i))
        throw Error(ErrorKind::InvalidPresentation,
                    "matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (m != kInfinity && m < 2)
        throw Error(ErrorKind::InvalidPresentation,
                    "off-diagonal entry < 2 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

CoxeterPresentation CoxeterPresentation::dihedral(int m, std::string name) {
  return CoxeterPresentation(2, {{1, m}, {m, 1}}, std::move(name));
}

CoxeterPresentation CoxeterPresentation::triangle(int m12, int m13, int m23, std::string name) {
  return CoxeterPresentation(3, {{1, m12, m13}, {m12, 1, m23}, {m13, m23, 1}}, std::move(name));
}

bool CoxeterPresentation::classify_large() const {
  for (auto [i, j] : pairs())
    if (finite(i, j) && label(i, j) < 3) return false;
  return true;
}

bool CoxeterPresentation::classify_extra_large() const {
  for (auto [i, j] : pairs())
    if (finite(i, j) && label(i, j) < 4) return false;
  return true;
}

bool CoxeterPresentation::classify_33m() const {
  if (!classify_large()) return false;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k) {
        if (i == j || i == k) continue;
        // Apex i carries the two 3-labelled edges; the opposite edge is finite.
        if (label(i, j) == 3 && label(i, k) == 3 && finite(j, k)) return false;
      }
  return true;
}

Classification CoxeterPresentation::classify() const {
  Classification c;
  c.large = classify_large();
  c.extra_large = classify_extra_large();
  c.satisfies_33m = classify_33m();
  c.dihedral = n_ == 2;
  c.free = true;
  for (auto [i, j] : pairs())
    if (finite(i, j)) c.free = false;
  return c;
}

int CoxeterPresentation::max_finite_label() const {
  int best = 0;
  for (auto [i, j] : pairs())
    if (finite(i, j)) best = std::max(best, label(i, j));
  return best;
}

std::uint64_t CoxeterPresentation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  mix(n_);
  for (const auto& row : m_)
    for (int v : row) mix(v);
  return h;
}

std::vector<std::pair<int, int>> CoxeterPresentation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.emplace_back(i, j);
  return out;
}

Classification validate_presentation(const CoxeterPresentation& pres) {
  // Construction already rejected malformed matrices.
  return pres.classify();
}

CoxeterPresentation presentation_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidPresentation, std::string("presentation is not valid JSON: ") + e.what());
  }
  if (!doc.contains("n") || !doc.contains("matrix"))
    throw Error(ErrorKind::InvalidPresentation, "presentation needs fields 'n' and 'matrix'");
  int n = doc["n"].get<int>();
  std::vector<std::vector<int>> matrix;
  for (const auto& row : doc["matrix"]) {
    std::vector<int> r;
    for (const auto& entry : row) {
      if (entry.is_string()) {
        std::string s = entry.get<std::string>();
        if (s != "inf" && s != "infinity")
          throw Error(ErrorKind::InvalidPresentation, "unknown matrix entry '" + s + "'");
        r.push_back(kInfinity);
      } else {
        r.push_back(entry.get<int>());
      }
    }
    matrix.push_back(std::move(r));
  }
  std::string name = doc.value("name", std::string{});
  return CoxeterPresentation(n, std::move(matrix), std::move(name));
}

std::string presentation_to_json(const CoxeterPresentation& pres) {
  nlohmann::json doc;
  doc["name"] = pres.name();
  doc["n"] = pres.generators();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : pres.matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) {
      if (v == kInfinity) r.push_back("inf");
      else r.push_back(v);
    }
    rows.push_back(r);
  }
  doc["matrix"] = rows;
  return doc.dump();
}

CoxeterPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open presentation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return presentation_from_json(ss.str());
}

CoxeterPresentation preset(const std::string& name) {
  if (name == "DA3") return CoxeterPresentation::dihedral(3, name);
  if (name == "DA4") return CoxeterPresentation::dihedral(4, name);
  if (name == "DA5") return CoxeterPresentation::dihedral(5, name);
  if (name == "DAinf") return CoxeterPresentation::dihedral(kInfinity, name);
  if (name == "tri345") return CoxeterPresentation::triangle(3, 4, 5, name);
  if (name == "tri444") return CoxeterPresentation::triangle(4, 4, 4, name);
  if (name == "tri555") return CoxeterPresentation::triangle(5, 5, 5, name);
  if (name == "tri433") return CoxeterPresentation::triangle(4, 3, 3, name);
  throw Error(ErrorKind::InvalidArgument, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"DA3", "DA4", "DA5", "DAinf", "tri345", "tri444", "tri555", "tri433"};
}

void require_large(const CoxeterPresentation& pres, const char* what) {
  if (!pres.classify_large())
    throw Error(ErrorKind::HypothesisViolated, std::string(what) + ": presentation is not of large type");
}

void require_33m(const CoxeterPresentation& pres, const char* what) {
  require_large(pres, what);
  if (!pres.classify_33m())
    throw Error(ErrorKind::HypothesisViolated,
                std::string(what) + ": presentation has a triangle labelled 3,3,m");
}

}  // namespace artin
