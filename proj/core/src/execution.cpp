#include "igcob/execution.hpp"

#include <sstream>

#include "igcob/errors.hpp"

namespace igcob {

Graph execute(const Graph& g, const Graph& h) {
  const auto paths = alternating_paths(g, h);
  std::vector<EdgeSpec> edges;
  edges.reserve(paths.size());
  for (const auto& p : paths) edges.push_back({id_of_trace(p.trace()), p.source(), p.target()});
  return make_graph(symmetric_difference(g.vertices(), h.vertices()), edges);
}

ExtNat measure(const Graph& g, const Graph& h, Orientation mode) {
  try {
    return ExtNat(prime_cycles(g, h, mode).size());
  } catch (const InfiniteCycleSet&) {
    return ExtNat::omega();
  }
}

void require_empty_triple_intersection(const Graph& f, const Graph& g, const Graph& h) {
  const auto common = intersection(intersection(f.vertices(), g.vertices()), h.vertices());
  if (!common.empty()) {
    throw PreconditionViolation("vertex '" + *common.begin() + "' is shared by all three graphs");
  }
}

namespace {

std::string describe(const char* name, const NormalForm& nf) {
  std::ostringstream os;
  os << "graph " << name << '\n';
  for (const auto& v : nf.vertices) os << "vertex " << v << '\n';
  for (const auto& [trace, s, t] : nf.edges) os << "edge " << id_of_trace(trace) << ' ' << s << ' ' << t << '\n';
  return os.str();
}

}  // namespace

Report check_associativity(const Graph& f, const Graph& g, const Graph& h) {
  require_empty_triple_intersection(f, g, h);
  const auto left = normal_form(execute(execute(f, g), h));
  const auto right = normal_form(execute(f, execute(g, h)));

  Report r;
  r.property = "assoc";
  r.verdict = left == right ? Verdict::Pass : Verdict::Fail;
  r.set("vertices", left.vertices.size());
  r.set("left_edges", left.edges.size());
  r.set("right_edges", right.edges.size());
  if (!r.passed()) {
    r.witnesses.push_back("# (F::G)::H\n" + describe("lhs", left));
    r.witnesses.push_back("# F::(G::H)\n" + describe("rhs", right));
  }
  return r;
}

Report check_trefoil(const Graph& f, const Graph& g, const Graph& h, Orientation mode) {
  require_empty_triple_intersection(f, g, h);
  const Graph gh = execute(g, h);
  const Graph fg = execute(f, g);
  const std::uint64_t c_f_gh = prime_cycles(f, gh, mode).size();
  const std::uint64_t c_g_h = prime_cycles(g, h, mode).size();
  const std::uint64_t c_h_fg = prime_cycles(h, fg, mode).size();
  const std::uint64_t c_f_g = prime_cycles(f, g, mode).size();

  Report r;
  r.property = "trefoil";
  r.verdict = c_f_gh + c_g_h == c_h_fg + c_f_g ? Verdict::Pass : Verdict::Fail;
  r.set("mode", to_string(mode));
  r.set("C(F,G::H)", c_f_gh);
  r.set("C(G,H)", c_g_h);
  r.set("C(H,F::G)", c_h_fg);
  r.set("C(F,G)", c_f_g);
  return r;
}

}  // namespace igcob
