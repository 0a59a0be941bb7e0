#pragma once

// Serialization: graphs as JSON or Graphviz DOT, assignments, polynomials,
// matrices and reports as JSON, cell tables as CSV. Also the small exact
// expression syntax used by stored fixtures ("2/sqrt2", "-i", "3*i/4").

#include "mirror/critical_solver.hpp"
#include "mirror/mirror_graph.hpp"
#include "mirror/peterson_map.hpp"
#include "mirror/sparse_poly.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace mirror {

using Json = nlohmann::ordered_json;

/// Doubles as numbers, complex as {"re","im"}, exact scalars as strings.
template <Scalar S>
Json scalar_to_json(const S& x) {
  if constexpr (std::is_same_v<S, double>) {
    return x;
  } else if constexpr (std::is_same_v<S, Complex>) {
    return Json{{"re", x.real()}, {"im", x.imag()}};
  } else {
    return ScalarTraits<S>::to_string(x);
  }
}

template <Scalar S>
Json vector_to_json(const std::vector<S>& v) {
  Json out = Json::array();
  for (const S& x : v) out.push_back(scalar_to_json(x));
  return out;
}

inline Json spec_to_json(const ParabolicSpec& s) { return Json{{"n", s.n()}, {"parabolic", s.ip()}, {"label", s.label()}}; }

inline Json graph_to_json(const MirrorGraph& g) {
  Json vertices = Json::array();
  for (const Vertex& v : g.vertices()) {
    Json x{{"m", v.m}, {"r", v.r}, {"kind", v.kind == VertexKind::star ? "star" : "bullet"}};
    if (v.kind == VertexKind::star) x["j"] = v.j;
    vertices.push_back(x);
  }
  Json arrows = Json::array();
  for (const Arrow& a : g.arrows())
    arrows.push_back({{"name", a.name()}, {"tail", a.tail}, {"head", a.head}});
  Json squares = Json::array();
  for (const BoxSquare& b : g.squares())
    squares.push_back({{"m", b.m}, {"r", b.r},
                       {"relation", g.arrows()[b.c_right].name() + "*" + g.arrows()[b.d_top].name() + " = " +
                                        g.arrows()[b.d_bottom].name() + "*" + g.arrows()[b.c_left].name()}});
  return Json{{"spec", spec_to_json(g.spec())},
              {"bullets", g.num_bullets()},
              {"stars", g.spec().k() + 1},
              {"vertices", vertices},
              {"arrows", arrows},
              {"boxes", squares}};
}

/// Nodes named v<m>_<r>; stars drawn as boxes.
inline std::string graph_to_dot(const MirrorGraph& g) {
  std::ostringstream os;
  os << "digraph \"" << g.spec().label() << "\" {\n";
  for (const Vertex& v : g.vertices()) {
    os << "  v" << v.m << "_" << v.r << " [label=\"(" << v.m << "," << v.r << ")\"";
    if (v.kind == VertexKind::star) os << ", shape=box";
    os << "];\n";
  }
  for (const Arrow& a : g.arrows()) {
    const Vertex& t = g.vertices()[a.tail];
    const Vertex& h = g.vertices()[a.head];
    os << "  v" << t.m << "_" << t.r << " -> v" << h.m << "_" << h.r << " [label=\"" << a.name() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

template <Scalar S>
Json assignment_to_json(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  Json out = Json::object();
  for (std::size_t a = 0; a < g.num_arrows(); ++a) out[g.arrows()[a].name()] = scalar_to_json(rho[a]);
  return out;
}

inline Json poly_to_json(const MirrorGraph& g, const SparsePoly& p) {
  return p.to_string([&](int id) { return arrow_name(g, id); });
}

template <Scalar S>
Json matrix_to_json(const Matrix<S>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

inline Json solve_report_to_json(const MirrorGraph& g, const SolveReport& rep) {
  return Json{{"spec", spec_to_json(g.spec())},
              {"qtilde_target", rep.qtilde_target},
              {"converged", rep.converged},
              {"iterations", rep.iterations},
              {"residual", rep.residual},
              {"phase", rep.phase},
              {"hessian_always_pd", rep.hessian_always_pd},
              {"qtilde", rep.qtilde},
              {"stratum", classify_boundary(g, rep.rho).value_or(std::vector<int>{})},
              {"rho", assignment_to_json(g, rep.rho)}};
}

inline Json check_to_json(const CheckResult& c) {
  Json dev = std::isfinite(c.deviation) ? Json(c.deviation) : Json("inf");
  return Json{{"name", c.name}, {"deviation", dev}, {"passed", c.passed}};
}

inline Json peterson_report_to_json(const PetersonReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

inline std::string join_indices(const std::vector<int>& v, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

/// Columns J,K,dim with J = I^{P'} and K = I^P as ';'-separated lists.
inline std::string cells_to_csv(const std::vector<CellLabel>& cells) {
  std::string out = "J,K,dim\n";
  for (const auto& c : cells) out += join_indices(c.j) + "," + join_indices(c.k) + "," + std::to_string(c.dim) + "\n";
  return out;
}

inline Json cells_to_json(const std::vector<CellLabel>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back({{"J", c.j}, {"K", c.k}, {"dim", c.dim}});
  return out;
}

// ---------------------------------------------------------------------------
// Fixture expressions

/// Value of "[-]f1 op f2 op ..." with op in {*, /} and factors that are
/// integers, "sqrt2" or "i". Exact types reject sqrt2, real types reject i.
template <class T>
T parse_fixture_value(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto factor = [&]() -> T {
    skip();
    if (text.compare(pos, 5, "sqrt2") == 0) {
      pos += 5;
      if constexpr (std::is_same_v<T, GaussianRational> || std::is_same_v<T, Rational>) {
        throw std::invalid_argument("fixture value: sqrt2 is not exact in '" + text + "'");
      } else {
        return T(std::sqrt(2.0L));
      }
    }
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      if constexpr (std::is_same_v<T, Rational> || std::is_floating_point_v<T>) {
        throw std::invalid_argument("fixture value: i is not real in '" + text + "'");
      } else if constexpr (std::is_same_v<T, GaussianRational>) {
        return GaussianRational::i();
      } else {
        return T(0.0L, 1.0L);
      }
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("fixture value: cannot parse '" + text + "'");
    if constexpr (std::is_same_v<T, GaussianRational> || std::is_same_v<T, Rational>) {
      return T(parse_rational(text.substr(start, pos - start)));
    } else {
      return T(std::stold(text.substr(start, pos - start)));
    }
  };
  skip();
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  T value = factor();
  for (skip(); pos < text.size(); skip()) {
    char op = text[pos++];
    if (op == '*') {
      value = value * factor();
    } else if (op == '/') {
      value = value / factor();
    } else {
      throw std::invalid_argument("fixture value: unexpected '" + std::string(1, op) + "' in '" + text + "'");
    }
  }
  return negative ? T(0) - value : value;
}

}  // namespace mirror
