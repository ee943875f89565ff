#include "twistform/serialization.hpp"

#include <cmath>
#include <sstream>

namespace twistform {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SerializationError(where.empty() ? "/" : where, what);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "/" + std::to_string(i)));
  return out;
}

Eigen::VectorXd vector_of(const json& j, int size, const std::string& where) {
  const auto v = numbers(j, where);
  if (static_cast<int>(v.size()) != size)
    fail(where, "expected " + std::to_string(size) + " numbers, got " + std::to_string(v.size()));
  return Eigen::Map<const Eigen::VectorXd>(v.data(), size);
}

AffinePoint point_of(const json& j, int size, const std::string& where) {
  return vector_of(j, size, where);
}

Parity parity_of(const json& j, const std::string& where) {
  const std::string s = text(j, where);
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  fail(where, "parity must be \"even\" or \"odd\"");
}

Kind kind_of(const json& j, const std::string& where) {
  const std::string s = text(j, where);
  if (s == "covector") return Kind::Covector;
  if (s == "vector") return Kind::Vector;
  fail(where, "kind must be \"covector\" or \"vector\"");
}

std::string tuple_key(IndexMask mask, int first_label) {
  std::string key;
  for (int pos : mask_indices(mask)) {
    if (!key.empty()) key += ",";
    key += std::to_string(pos + first_label);
  }
  return key;
}

// Parameters live under "params" or directly in the family object.
const json& params_of(const json& j) {
  const auto it = j.find("params");
  return it != j.end() ? *it : j;
}

std::string params_where(const json& j, const std::string& where) {
  return j.contains("params") ? where + "/params" : where;
}

std::vector<int> labels_to_positions(const json& j, SpaceDescriptor space, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of basis labels");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int label = integer(j[i], where + "/" + std::to_string(i));
    const int pos = label - space.first_label;
    if (pos < 0 || pos >= space.dim) fail(where + "/" + std::to_string(i), "basis label out of range");
    out.push_back(pos);
  }
  return out;
}

GradedElement offset_element(const json& j, Parity parity, int grade, SpaceDescriptor space,
                             const std::string& where) {
  if (j.is_array()) {
    const Eigen::VectorXd v = vector_of(j, binomial(space.dim, grade), where);
    Coeffs c(v.size());
    for (int i = 0; i < v.size(); ++i) c[i] = v[i];
    return GradedElement(Kind::Covector, parity, grade, space, c);
  }
  GradedElement x = graded_from_json(j, space.first_label, where);
  if (x.kind() != Kind::Covector || x.parity() != parity || x.grade() != grade || x.dim() != space.dim)
    fail(where, "offset has the wrong type");
  return x;
}

}  // namespace

json to_json(const GradedElement& x) {
  json coeffs = json::object();
  const auto basis = combinations(x.dim(), x.grade());
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    coeffs[tuple_key(basis[i], x.space().first_label)] = x[i];
  return json{{"kind", to_string(x.kind())},
              {"parity", to_string(x.parity())},
              {"grade", x.grade()},
              {"dim", x.dim()},
              {"first_label", x.space().first_label},
              {"coeffs", coeffs}};
}

GradedElement graded_from_json(const json& j, int default_first_label, const std::string& where) {
  const Kind kind = kind_of(member(j, "kind", where), where + "/kind");
  const Parity parity = parity_of(member(j, "parity", where), where + "/parity");
  const int grade = integer(member(j, "grade", where), where + "/grade");
  const int dim = integer(member(j, "dim", where), where + "/dim");
  if (dim < 1 || dim > kMaxDim) fail(where + "/dim", "dimension must lie in 1.." + std::to_string(kMaxDim));
  if (grade < 0 || grade > dim) fail(where + "/grade", "grade must lie in 0..dim");
  int first = default_first_label;
  if (j.contains("first_label")) first = integer(j["first_label"], where + "/first_label");
  const SpaceDescriptor space(dim, first);
  Coeffs c = Coeffs::Zero(binomial(dim, grade));
  const json& coeffs = member(j, "coeffs", where);
  if (!coeffs.is_object()) fail(where + "/coeffs", "expected an object keyed by index tuples");
  for (const auto& [key, value] : coeffs.items()) {
    const std::string at = where + "/coeffs/" + key;
    std::vector<int> pos;
    std::stringstream ss(key);
    std::string part;
    while (!key.empty() && std::getline(ss, part, ',')) {
      std::size_t used = 0;
      int label = 0;
      try {
        label = std::stoi(part, &used);
      } catch (const std::exception&) {
        fail(at, "index tuple must be comma-separated integers");
      }
      if (used != part.size()) fail(at, "index tuple must be comma-separated integers");
      const int p = label - first;
      if (p < 0 || p >= dim) fail(at, "basis label out of range");
      if (!pos.empty() && p <= pos.back()) fail(at, "index tuple must be strictly increasing");
      pos.push_back(p);
    }
    if (static_cast<int>(pos.size()) != grade) fail(at, "index tuple length differs from grade");
    c[rank_of(dim, indices_mask(pos))] = number(value, at);
  }
  return GradedElement(kind, parity, grade, space, c);
}

json to_json(const TensorQM& t) { return json{{"w", to_json(t.w())}, {"e", to_json(t.e())}}; }

TensorQM tensor_from_json(const json& j, const std::string& where) {
  const GradedElement w = graded_from_json(member(j, "w", where), 1, where + "/w");
  const GradedElement e = graded_from_json(member(j, "e", where), w.space().first_label, where + "/e");
  try {
    return TensorQM(w, e);
  } catch (const AlgebraError& err) {
    fail(where, err.what());
  }
}

SmoothForm field_from_json(const json& j, SpaceDescriptor space, const std::string& where) {
  const std::string family = text(member(j, "family", where), where + "/family");
  const json& p = params_of(j);
  const std::string pw = params_where(j, where);
  auto type_of = [&](Parity default_parity, int default_grade) {
    FormType t{default_parity, default_grade, space};
    if (j.contains("parity")) t.parity = parity_of(j["parity"], where + "/parity");
    if (j.contains("grade")) t.grade = integer(j["grade"], where + "/grade");
    if (t.grade < 0 || t.grade > space.dim) fail(where + "/grade", "grade must lie in 0..m");
    return t;
  };
  try {
    if (family == "polynomial") {
      const FormType type = type_of(Parity::Even, 1);
      const json& terms = member(p, "terms", pw);
      if (!terms.is_array()) fail(pw + "/terms", "expected an array");
      std::vector<Monomial> out;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = pw + "/terms/" + std::to_string(i);
        Monomial m;
        m.coeff = number(member(terms[i], "coeff", at), at + "/coeff");
        m.positions = labels_to_positions(member(terms[i], "index", at), space, at + "/index");
        const json& powers = member(terms[i], "powers", at);
        if (!powers.is_array() || static_cast<int>(powers.size()) != space.dim)
          fail(at + "/powers", "expected one power per coordinate");
        for (std::size_t k = 0; k < powers.size(); ++k)
          m.powers.push_back(integer(powers[k], at + "/powers/" + std::to_string(k)));
        out.push_back(std::move(m));
      }
      return polynomial_form(type, std::move(out));
    }
    if (family == "trig") {
      const FormType type = type_of(Parity::Even, 1);
      const json& terms = member(p, "terms", pw);
      if (!terms.is_array()) fail(pw + "/terms", "expected an array");
      std::vector<TrigTerm> out;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = pw + "/terms/" + std::to_string(i);
        TrigTerm t;
        t.coeff = number(member(terms[i], "coeff", at), at + "/coeff");
        t.positions = labels_to_positions(member(terms[i], "index", at), space, at + "/index");
        t.k = vector_of(member(terms[i], "k", at), space.dim, at + "/k");
        if (terms[i].contains("phase")) t.phase = number(terms[i]["phase"], at + "/phase");
        out.push_back(std::move(t));
      }
      return trig_form(type, std::move(out));
    }
    if (family == "plane_wave") {
      const Eigen::VectorXd k = vector_of(member(p, "k", pw), space.dim, pw + "/k");
      const Eigen::VectorXd pol = vector_of(member(p, "pol", pw), space.dim, pw + "/pol");
      const double amp = p.contains("amp") ? number(p["amp"], pw + "/amp") : 1.0;
      const double phase = p.contains("phase") ? number(p["phase"], pw + "/phase") : 0.0;
      return plane_wave(space, k, pol, amp, phase);
    }
    if (family == "coulomb") {
      const char* key = p.contains("q") ? "q" : "charge";
      const double q = number(member(p, key, pw), pw + "/" + key);
      AffinePoint center = AffinePoint::Zero(space.dim);
      if (p.contains("center")) center = point_of(p["center"], space.dim, pw + "/center");
      return coulomb(space, q, center);
    }
    if (family == "constant_field") {
      const GradedElement f = offset_element(member(p, "F", pw), Parity::Even, 2, space, pw + "/F");
      return constant_field_potential(f);
    }
    if (family == "zero") return SmoothForm::zero(type_of(Parity::Even, 1));
  } catch (const SerializationError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    fail(where, err.what());
  }
  fail(where + "/family", "unknown field family \"" + family + "\"");
}

json to_json(const CubeDomain& box) {
  return json{{"min", std::vector<double>(box.min.begin(), box.min.end())},
              {"max", std::vector<double>(box.max.begin(), box.max.end())}};
}

CubeDomain cube_from_json(const json& j, int dim, const std::string& where) {
  CubeDomain box{point_of(member(j, "min", where), dim, where + "/min"),
                 point_of(member(j, "max", where), dim, where + "/max")};
  for (int i = 0; i < dim; ++i)
    if (!(box.min[i] < box.max[i])) fail(where, "box needs min < max on every axis");
  return box;
}

json to_json(const DiracCurrent& d) {
  return json{{"point", std::vector<double>(d.point.begin(), d.point.end())}, {"w", to_json(d.w)}};
}

DiracCurrent dirac_from_json(const json& j, SpaceDescriptor space, const std::string& where) {
  DiracCurrent d{point_of(member(j, "point", where), space.dim, where + "/point"),
                 graded_from_json(member(j, "w", where), space.first_label, where + "/w")};
  if (d.w.kind() != Kind::Vector || d.w.parity() != Parity::Odd || d.w.grade() != space.dim ||
      d.w.dim() != space.dim)
    fail(where + "/w", "Dirac weight must be an odd m-vector");
  return d;
}

json to_json(const QuadraticDensity& k) {
  if (!k.is_constant()) throw SerializationError("/", "only constant densities serialize");
  const AffinePoint origin = AffinePoint::Zero(k.space().dim);
  auto rows = [](const Eigen::MatrixXd& m) {
    std::vector<double> out;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
    return out;
  };
  return json{{"dependence", "constant"},
              {"dim", k.space().dim},
              {"lambda", rows(k.lambda(origin).matrix())},
              {"mu", rows(k.mu(origin).matrix())},
              {"nu", rows(k.nu(origin).matrix())},
              {"offset", k.offset(origin)}};
}

QuadraticDensity density_from_json(const json& j, SpaceDescriptor space, const std::string& where) {
  if (j.contains("dependence") && text(j["dependence"], where + "/dependence") != "constant")
    fail(where + "/dependence", "only \"constant\" densities are supported");
  const int m = space.dim;
  auto block = [&](const char* key, int rows, int cols) {
    const std::string at = where + "/" + key;
    const Eigen::VectorXd v = vector_of(member(j, key, where), rows * cols, at);
    Eigen::MatrixXd out(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) out(r, c) = v[r * cols + c];
    return out;
  };
  const int n1 = binomial(m, 1), n2 = binomial(m, 2);
  const double offset = j.contains("offset") ? number(j["offset"], where + "/offset") : 0.0;
  try {
    return QuadraticDensity(space, block("lambda", n1, n1), block("mu", n1, n2),
                            block("nu", n2, n2), offset);
  } catch (const VariationalError& err) {
    fail(where, err.what());
  }
}

Trajectory trajectory_from_json(const json& j, const MinkowskiStructure& ms, const std::string& where) {
  const SpaceDescriptor space = ms.space();
  const SmoothForm a = field_from_json(member(j, "A", where), space, where + "/A");
  if (a.parity() != Parity::Even || a.grade() != 1) fail(where + "/A", "potential must be an even 1-form");

  auto spec_of = [&](const char* key, const char* fallback) -> std::pair<std::string, const json*> {
    if (!j.contains(key)) return {fallback, nullptr};
    const json& s = j[key];
    if (s.is_string()) return {s.get<std::string>(), nullptr};
    if (s.is_object()) return {text(member(s, "family", where + "/" + key), where + "/" + key + "/family"), &s};
    fail(where + "/" + key, "expected a family name or object");
  };

  const auto [g_family, g_spec] = spec_of("G", "from_constitutive");
  if (g_family != "from_constitutive")
    fail(where + "/G", "induction family must be \"from_constitutive\"");
  std::optional<GradedElement> g_offset;
  if (g_spec && g_spec->contains("offset"))
    g_offset = offset_element((*g_spec)["offset"], Parity::Odd, 2, space, where + "/G/offset");

  const auto [j_family, j_spec] = spec_of("J", "zero");
  std::optional<GradedElement> j_offset;
  if (j_spec && j_spec->contains("offset"))
    j_offset = offset_element((*j_spec)["offset"], Parity::Odd, 3, space, where + "/J/offset");
  if (j_family == "from_maxwell") return Trajectory::from_potential(ms, a, g_offset, j_offset);
  if (j_family == "zero") return Trajectory::vacuum(ms, a, g_offset, j_offset);
  fail(where + "/J", "source family must be \"zero\" or \"from_maxwell\"");
}

json to_json(const Verdict& v) {
  return json{{"interior_residual", v.interior_residual},
              {"boundary_residual", v.boundary_residual},
              {"pass", v.pass}};
}

json parse_json_text(const std::string& content, const std::string& source) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& err) {
    throw SerializationError(source + " (byte " + std::to_string(err.byte) + ")", err.what());
  }
}

}  // namespace twistform
