#include "medial/invariants.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace medial {

InvariantRecord component_invariants(const MedialComplex& c, const ComponentGraph& lambda) {
  if (!c.fin_free()) throw std::invalid_argument("invariants need a fin-free component");
  InvariantRecord r;
  r.s = static_cast<int>(c.sheets.size());
  r.c = static_cast<int>(components(c.ynet).size());
  r.lambda = betti1(lambda.graph);
  r.v = static_cast<int>(c.ynet.counted_vertex_count());
  for (const auto& sh : c.sheets) {
    int e = sh.edge_count();
    int g = sh.weighted_genus();
    r.e += e;
    r.G += g;
    r.q += e > 0 ? g + e - 1 : g;
    if (e == 0) {
      ++r.s0;
      if (sh.orientable) {
        ++r.s0o;
      } else {
        ++r.s0n;
      }
    }
  }
  r.Q = r.lambda + r.v + r.c + r.q;
  r.nu = r.s - r.c - r.lambda;
  r.chi = euler_characteristic(r);
  return r;
}

InvariantRecord component_invariants(const MedialComplex& c) {
  return component_invariants(c, build_component_graph(c));
}

int euler_characteristic(const InvariantRecord& r) {
  int by_presentation = r.s0 - r.Q;
  int by_counts = r.s - (r.e + r.v + r.c + r.G + r.lambda);
  if (by_presentation != by_counts) {
    throw std::logic_error("reduced Euler characteristic disagrees: " + std::to_string(by_presentation) + " vs " +
                           std::to_string(by_counts));
  }
  return by_presentation;
}

bool euler_relation_holds(const InvariantRecord& r) { return r.s - r.e == r.v + r.c; }

GlobalInvariantRecord global_invariants(const std::vector<InvariantRecord>& components, const ExtendedGraph& gamma) {
  GlobalInvariantRecord g;
  g.components = components;
  g.beta1 = betti1(gamma);
  int nu_sum = 0;
  int chi_sum = 0;
  for (const auto& r : components) {
    g.s += r.s;
    g.c += r.c;
    g.v += r.v;
    g.e += r.e;
    g.G += r.G;
    g.q += r.q;
    g.Q += r.Q;
    g.s0 += r.s0;
    g.s0o += r.s0o;
    g.s0n += r.s0n;
    g.lambda += r.lambda;
    nu_sum += r.nu;
    chi_sum += r.chi;
  }
  g.nu = nu_sum - g.beta1;
  int by_nu = g.nu - (g.G + g.e + g.v);
  int by_counts = g.s - (g.e + g.v + g.c + g.G + g.beta1 + g.lambda);
  if (by_nu != by_counts || by_nu != chi_sum - g.beta1) {
    throw std::logic_error("global reduced Euler characteristic disagrees");
  }
  g.chi = by_nu;
  return g;
}

std::string invariant_table(const GlobalInvariantRecord& g) {
  std::vector<std::string> names = {"s", "c", "lambda", "v", "e", "G", "q", "Q", "nu", "s0", "s0o", "s0n", "chi"};
  auto field = [](const InvariantRecord& r, std::size_t i) {
    const int values[] = {r.s, r.c, r.lambda, r.v, r.e, r.G, r.q, r.Q, r.nu, r.s0, r.s0o, r.s0n, r.chi};
    return values[i];
  };
  const int totals[] = {g.s, g.c, g.lambda, g.v, g.e, g.G, g.q, g.Q, g.nu, g.s0, g.s0o, g.s0n, g.chi};
  std::ostringstream os;
  os << std::left << std::setw(8) << "";
  for (std::size_t k = 0; k < g.components.size(); ++k) {
    os << std::right << std::setw(6) << ("M" + std::to_string(k + 1));
  }
  os << std::setw(8) << "M" << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << std::left << std::setw(8) << names[i] << std::right;
    for (const auto& r : g.components) os << std::setw(6) << field(r, i);
    os << std::setw(8) << totals[i] << "\n";
  }
  os << std::left << std::setw(8) << "beta1" << std::right << std::setw(6 * static_cast<int>(g.components.size()) + 8)
     << g.beta1 << "\n";
  return os.str();
}

}  // namespace medial
