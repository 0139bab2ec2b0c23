#include "igcob/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <thread>

#include "igcob/bimodular.hpp"
#include "igcob/cob0.hpp"
#include "igcob/errors.hpp"
#include "igcob/execution.hpp"
#include "igcob/functor_bridge.hpp"
#include "igcob/random_instances.hpp"
#include "igcob/text_format.hpp"

namespace igcob {

namespace {

struct Outcome {
  enum Kind { Pass, Fail, Skip } kind = Pass;
  std::string witness;
  bool interesting = false;  // the trial exercised something non-vacuous
};

// Runs fn(0..n-1) on a worker pool; results are stored by index so the
// aggregate does not depend on scheduling.
std::vector<Outcome> run_indexed(std::uint64_t n, std::size_t threads, const std::function<Outcome(std::uint64_t)>& fn) {
  std::vector<Outcome> out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<std::size_t>(threads, std::max<std::uint64_t>(n, 1));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < n; i = next++) out[i] = fn(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

std::string percent(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return "0.0%";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * static_cast<double>(part) / static_cast<double>(whole));
  return buf;
}

Report summarize(std::string property, const std::vector<Outcome>& outcomes, const char* interesting_label,
                 std::size_t max_witnesses = 3) {
  Report r;
  r.property = std::move(property);
  std::uint64_t passed = 0, failed = 0, skipped = 0, interesting = 0;
  for (const auto& o : outcomes) {
    switch (o.kind) {
      case Outcome::Pass: ++passed; break;
      case Outcome::Fail:
        ++failed;
        if (r.witnesses.size() < max_witnesses) r.witnesses.push_back(o.witness);
        break;
      case Outcome::Skip: ++skipped; break;
    }
    interesting += o.interesting ? 1 : 0;
  }
  r.verdict = failed == 0 ? Verdict::Pass : Verdict::Fail;
  r.set("trials", outcomes.size());
  r.set("checked", passed + failed);
  r.set("passed", passed);
  r.set("failed", failed);
  r.set("skipped", skipped);
  r.set("skip_rate", percent(skipped, outcomes.size()));
  if (interesting_label) r.set(interesting_label, interesting);
  return r;
}

std::string triple_text(const Graph& f, const Graph& g, const Graph& h) {
  return format_graph("F", f) + format_graph("G", g) + format_graph("H", h);
}

Outcome assoc_outcome(const Graph& f, const Graph& g, const Graph& h) {
  try {
    const Report rep = check_associativity(f, g, h);
    Outcome o;
    o.kind = rep.passed() ? Outcome::Pass : Outcome::Fail;
    o.interesting = rep.get("left_edges") != "0";
    if (!rep.passed()) o.witness = triple_text(f, g, h);
    return o;
  } catch (const InfinitePathSet&) {
    return {Outcome::Skip, {}, false};
  }
}

Outcome trefoil_outcome(const Graph& f, const Graph& g, const Graph& h) {
  try {
    const Report rep = check_trefoil(f, g, h, Orientation::Directed);
    Outcome o;
    o.kind = rep.passed() ? Outcome::Pass : Outcome::Fail;
    o.interesting = rep.get("C(F,G::H)") != "0" || rep.get("C(H,F::G)") != "0";
    if (!rep.passed()) o.witness = triple_text(f, g, h);
    return o;
  } catch (const InfinitePathSet&) {
    return {Outcome::Skip, {}, false};
  } catch (const InfiniteCycleSet&) {
    return {Outcome::Skip, {}, false};
  }
}

std::size_t bound_or(const CampaignOptions& o, std::size_t fallback) {
  return o.exhaustive_bound == 0 ? fallback : o.exhaustive_bound;
}

LabelSet named_object(const std::string& stem, std::size_t size) {
  LabelSet out;
  for (std::size_t i = 1; i <= size; ++i) out.insert(stem + std::to_string(i));
  return out;
}

bool cob0_laws_hold(const Cob0Morphism& m, const Cob0Morphism& n, const Cob0Morphism& p) {
  return cob0_compose(cob0_compose(m, n), p) == cob0_compose(m, cob0_compose(n, p));
}

bool cob0_units_hold(const Cob0Morphism& m) {
  return cob0_compose(cob0_identity(m.source()), m) == m && cob0_compose(m, cob0_identity(m.target())) == m;
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"assoc",   "trefoil",          "cob0-laws",         "functor",
                                              "faithful", "bimod-degeneracy", "bimod-well-defined"};
  return names;
}

Report run_campaign(std::string_view name, const CampaignOptions& options) {
  if (name == "assoc") return run_associativity_campaign(options);
  if (name == "trefoil") return run_trefoil_campaign(options);
  if (name == "cob0-laws") return run_cob0_laws_campaign(options);
  if (name == "functor") return run_functoriality_campaign(options);
  if (name == "faithful") return run_faithfulness_campaign(options);
  if (name == "bimod-degeneracy") return run_bimod_degeneracy_campaign(options);
  if (name == "bimod-well-defined") return run_bimod_well_defined_campaign(options);
  throw PreconditionViolation("unknown property '" + std::string(name) + "'");
}

Report run_associativity_campaign(const CampaignOptions& options) {
  auto outcomes = run_indexed(options.trials, options.threads, [&](std::uint64_t i) {
    Rng rng = trial_rng(options.seed, i);
    auto t = random_triple(rng, options.max_vertices, options.max_edges);
    return assoc_outcome(t.f, t.g, t.h);
  });
  Report r = summarize("assoc", outcomes, "nonempty_results");
  r.set("seed", options.seed);
  return r;
}

Report run_trefoil_campaign(const CampaignOptions& options) {
  auto outcomes = run_indexed(options.trials, options.threads, [&](std::uint64_t i) {
    Rng rng = trial_rng(options.seed, i);
    auto t = random_triple(rng, options.max_vertices, options.max_edges);
    return trefoil_outcome(t.f, t.g, t.h);
  });
  Report r = summarize("trefoil", outcomes, "trials_with_cycles");
  r.set("mode", "directed");
  r.set("seed", options.seed);
  return r;
}

Report run_cob0_laws_campaign(const CampaignOptions& options) {
  const std::size_t bound = bound_or(options, 3);
  constexpr std::uint64_t kMaxCircles = 1;
  std::vector<std::vector<std::vector<Cob0Morphism>>> homs(bound + 1, std::vector<std::vector<Cob0Morphism>>(bound + 1));
  for (std::size_t a = 0; a <= bound; ++a) {
    for (std::size_t b = 0; b <= bound; ++b) homs[a][b] = cob0_enumerate(standard_object(a), standard_object(b), kMaxCircles);
  }

  // One task per object-size quadruple (a, b, c, d).
  const std::uint64_t side = bound + 1;
  auto outcomes = run_indexed(side * side * side * side, options.threads, [&](std::uint64_t i) {
    const std::size_t a = i % side, b = (i / side) % side, c = (i / side / side) % side, d = i / side / side / side;
    Outcome o;
    for (const auto& m : homs[a][b]) {
      for (const auto& n : homs[b][c]) {
        for (const auto& p : homs[c][d]) {
          o.interesting = true;
          if (!cob0_laws_hold(m, n, p)) {
            o.kind = Outcome::Fail;
            o.witness = format_cob("M", m) + format_cob("N", n) + format_cob("P", p);
            return o;
          }
        }
      }
    }
    return o;
  });
  std::uint64_t triples = 0;
  for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
    const std::size_t a = i % side, b = (i / side) % side, c = (i / side / side) % side, d = i / side / side / side;
    triples += homs[a][b].size() * homs[b][c].size() * homs[c][d].size();
  }

  std::uint64_t unit_checks = 0;
  std::vector<std::string> unit_failures;
  for (std::size_t a = 0; a <= bound; ++a) {
    for (std::size_t b = 0; b <= bound; ++b) {
      for (const auto& m : homs[a][b]) {
        ++unit_checks;
        if (!cob0_units_hold(m) && unit_failures.size() < 3) unit_failures.push_back(format_cob("M", m));
      }
    }
  }

  Report r = summarize("cob0-laws", outcomes, nullptr);
  r.fields.clear();
  r.set("bound", bound);
  r.set("max_circles", kMaxCircles);
  r.set("associativity_triples", triples);
  r.set("unit_checks", unit_checks);
  r.set("unit_failures", unit_failures.size());
  for (auto& w : unit_failures) r.witnesses.push_back(std::move(w));
  if (!unit_failures.empty()) r.verdict = Verdict::Fail;
  return r;
}

Report run_functoriality_campaign(const CampaignOptions& options) {
  const std::size_t bound = bound_or(options, 3);
  constexpr std::uint64_t kMaxCircles = 2;
  std::vector<std::vector<std::vector<Cob0Morphism>>> homs(bound + 1, std::vector<std::vector<Cob0Morphism>>(bound + 1));
  for (std::size_t a = 0; a <= bound; ++a) {
    for (std::size_t b = 0; b <= bound; ++b) homs[a][b] = cob0_enumerate(named_object("a", a), named_object("a", b), kMaxCircles);
  }

  struct Task {
    const Cob0Morphism* m;
    const Cob0Morphism* n;
  };
  std::vector<Task> tasks;
  for (std::size_t a = 0; a <= bound; ++a) {
    for (std::size_t b = 0; b <= bound; ++b) {
      for (std::size_t c = 0; c <= bound; ++c) {
        for (const auto& m : homs[a][b]) {
          for (const auto& n : homs[b][c]) tasks.push_back({&m, &n});
        }
      }
    }
  }
  auto outcomes = run_indexed(tasks.size(), options.threads, [&](std::uint64_t i) {
    const Report rep = check_functoriality(*tasks[i].m, *tasks[i].n);
    Outcome o;
    o.kind = rep.passed() ? Outcome::Pass : Outcome::Fail;
    o.interesting = rep.get("measure_unoriented") != "0";
    if (!rep.passed()) o.witness = rep.witnesses.empty() ? rep.to_text() : rep.witnesses.front();
    return o;
  });
  Report r = summarize("functor", outcomes, "pairs_creating_circles");
  r.set("bound", bound);
  r.set("max_circles", kMaxCircles);
  r.set("wager_measure", "unoriented");
  return r;
}

Report run_faithfulness_campaign(const CampaignOptions& options) {
  const std::size_t bound = bound_or(options, 6);
  constexpr std::uint64_t kMaxCircles = 2;
  Report r;
  r.property = "faithful";
  r.verdict = Verdict::Pass;
  r.set("bound", bound);
  r.set("max_circles", kMaxCircles);
  std::uint64_t hom_sets = 0;
  for (std::size_t total = 0; total <= bound; ++total) {
    for (std::size_t a = 0; a <= total; ++a) {
      const Report sub = check_faithfulness(named_object("a", a), named_object("b", total - a), kMaxCircles);
      ++hom_sets;
      const std::string key = std::to_string(a) + "+" + std::to_string(total - a);
      r.set("images[" + key + "]", sub.get("images") + "/" + sub.get("hom_size"));
      if (!sub.passed()) {
        r.verdict = Verdict::Fail;
        for (const auto& w : sub.witnesses) r.witnesses.push_back(w);
      } else if (!sub.get("plain_collapse").empty() && r.get("plain_collapse").empty()) {
        r.set("plain_collapse", key + ": " + sub.get("plain_collapse"));
      }
    }
  }
  r.set("hom_sets", hom_sets);
  return r;
}

Report run_bimod_degeneracy_campaign(const CampaignOptions& options) {
  auto outcomes = run_indexed(options.trials, options.threads, [&](std::uint64_t i) {
    Rng rng = trial_rng(options.seed, i);
    auto p = random_bimodular_pair(rng, options.max_vertices, options.max_edges, true);
    try {
      const BimodularGraph q = bimod_execute(p.f, p.g);
      const bool same = normal_form(q.graph()) == normal_form(execute(p.f.graph(), p.g.graph()));
      Outcome o;
      o.kind = same ? Outcome::Pass : Outcome::Fail;
      o.interesting = q.graph().edge_count() > 0;
      if (!same) o.witness = format_bimodular("F", p.f) + format_bimodular("G", p.g);
      return o;
    } catch (const InfinitePathSet&) {
      return Outcome{Outcome::Skip, {}, false};
    }
  });
  Report r = summarize("bimod-degeneracy", outcomes, "nonempty_results");
  r.set("seed", options.seed);
  return r;
}

Report run_bimod_well_defined_campaign(const CampaignOptions& options) {
  const std::size_t max_edges = std::min<std::size_t>(options.max_edges, 6);
  auto outcomes = run_indexed(options.trials, options.threads, [&](std::uint64_t i) {
    Rng rng = trial_rng(options.seed, i);
    auto p = random_bimodular_pair(rng, options.max_vertices, max_edges, false);
    try {
      const Report rep = check_well_defined(p.f, p.g);
      Outcome o;
      o.kind = rep.passed() ? Outcome::Pass : Outcome::Fail;
      o.interesting = rep.get("orbits") != rep.get("paths");
      if (!rep.passed()) o.witness = format_bimodular("F", p.f) + format_bimodular("G", p.g);
      return o;
    } catch (const InfinitePathSet&) {
      return Outcome{Outcome::Skip, {}, false};
    }
  });
  Report r = summarize("bimod-well-defined", outcomes, "trials_with_proper_quotient");
  r.set("seed", options.seed);
  r.set("max_group_order", 4);
  r.set("max_edges", max_edges);
  return r;
}

Report replay_campaign(std::string_view name, std::string_view document_text) {
  const Document doc = parse_document(document_text);
  auto need = [&](std::size_t graphs, std::size_t cobs) {
    if (doc.graphs.size() < graphs || doc.cobs.size() < cobs) {
      throw PreconditionViolation("replay of '" + std::string(name) + "' needs " + std::to_string(graphs) +
                                  " graph block(s) and " + std::to_string(cobs) + " cob block(s)");
    }
  };

  std::vector<Outcome> outcomes;
  if (name == "assoc" || name == "trefoil") {
    need(3, 0);
    const Graph f = doc.graphs[0].to_graph(), g = doc.graphs[1].to_graph(), h = doc.graphs[2].to_graph();
    outcomes.push_back(name == "assoc" ? assoc_outcome(f, g, h) : trefoil_outcome(f, g, h));
  } else if (name == "cob0-laws") {
    need(0, 1);
    Outcome o;
    std::vector<Cob0Morphism> ms;
    for (const auto& c : doc.cobs) ms.push_back(c.to_cob());
    for (const auto& m : ms) o.kind = cob0_units_hold(m) ? o.kind : Outcome::Fail;
    if (ms.size() >= 3 && !cob0_laws_hold(ms[0], ms[1], ms[2])) o.kind = Outcome::Fail;
    outcomes.push_back(o);
  } else if (name == "functor") {
    need(0, 2);
    const Report rep = check_functoriality(doc.cobs[0].to_cob(), doc.cobs[1].to_cob());
    outcomes.push_back({rep.passed() ? Outcome::Pass : Outcome::Fail, {}, true});
  } else if (name == "faithful") {
    need(0, 2);
    const Cob0Morphism m = doc.cobs[0].to_cob(), n = doc.cobs[1].to_cob();
    const IntProject a = functor_bar(m), b = functor_bar(n);
    const bool same_image = a.wager == b.wager && normal_form(a.morphism.graph()) == normal_form(b.morphism.graph());
    outcomes.push_back({same_image && !(m == n) ? Outcome::Fail : Outcome::Pass, {}, true});
  } else if (name == "bimod-degeneracy" || name == "bimod-well-defined") {
    need(2, 0);
    const BimodularGraph f = doc.graphs[0].to_bimodular(), g = doc.graphs[1].to_bimodular();
    try {
      bool ok = false;
      if (name == "bimod-degeneracy") {
        ok = normal_form(bimod_execute(f, g).graph()) == normal_form(execute(f.graph(), g.graph()));
      } else {
        ok = check_well_defined(f, g).passed();
      }
      outcomes.push_back({ok ? Outcome::Pass : Outcome::Fail, {}, true});
    } catch (const InfinitePathSet&) {
      outcomes.push_back({Outcome::Skip, {}, false});
    }
  } else {
    throw PreconditionViolation("unknown property '" + std::string(name) + "'");
  }
  Report r = summarize(std::string(name), outcomes, nullptr);
  r.set("replay", "yes");
  return r;
}

}  // namespace igcob
