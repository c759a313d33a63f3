#include "srn/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "srn/enumerate.hpp"
#include "srn/graph6.hpp"

namespace srn {

namespace {

constexpr int kNoValue = -1000000;

bool all_equal(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
}

bool all_odd(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x % 2 == 1; });
}

}  // namespace

LSequence l_sequence(const std::vector<StarForest>& forests) {
  if (forests.empty()) throw std::invalid_argument("l_sequence: need at least one forest");
  int q = static_cast<int>(forests.size());
  int p = 0;
  for (const auto& f : forests) p += f.component_count();

  // dp[c] = max of sum (n_{i,j_i} - 1) over tuples with j_1+...+j_i = c
  std::vector<int> dp(p + 1, kNoValue);
  dp[0] = 0;
  int used = 0;
  for (const auto& f : forests) {
    int limit = used + f.component_count();
    std::vector<int> next(p + 1, kNoValue);
    for (int c = 0; c <= used; ++c) {
      if (dp[c] == kNoValue) continue;
      for (int j = 1; j <= f.component_count(); ++j)
        next[c + j] = std::max(next[c + j], dp[c] + f.sizes[j - 1] - 1);
    }
    dp = std::move(next);
    used = limit;
  }

  LSequence out;
  for (int k = q; k <= p; ++k) {
    if (dp[k] == kNoValue) throw std::logic_error("l_sequence: missing value");
    out.values.push_back(dp[k] + 1);
    out.total += dp[k] + 1;
  }
  for (std::size_t i = 1; i < out.values.size(); ++i)
    if (out.values[i] > out.values[i - 1])
      throw std::logic_error("l_sequence: sequence not non-increasing");
  return out;
}

long long conjectured_size_ramsey(const std::vector<StarForest>& forests) {
  return l_sequence(forests).total;
}

Graph witness_graph(const std::vector<StarForest>& forests) {
  Graph g(0);
  for (int l : l_sequence(forests).values) g = disjoint_union(g, make_star(l));
  return g;
}

const char* to_string(InstanceClassKind k) {
  switch (k) {
    case InstanceClassKind::star_vs_forest: return "star-vs-forest";
    case InstanceClassKind::same_size_stars: return "same-size-stars";
    case InstanceClassKind::odd_stars_vs_forest: return "odd-stars-vs-forest";
    case InstanceClassKind::two_stars_vs_forest: return "two-stars-vs-forest";
    case InstanceClassKind::all_odd: return "all-odd";
    case InstanceClassKind::gyori_schelp_condition: return "gyori-schelp-condition";
    case InstanceClassKind::conjecture_only: return "conjecture-only";
  }
  return "?";
}

namespace {

std::optional<InstanceClass> try_match(InstanceClassKind kind, const StarForest& f1,
                                       const StarForest& f2) {
  const auto& n = f1.sizes;
  const auto& m = f2.sizes;
  int s = f1.component_count();
  int t = f2.component_count();

  switch (kind) {
    case InstanceClassKind::star_vs_forest:
      if (s == 1 && m.back() >= 2)
        return InstanceClass{kind, "n=" + std::to_string(n[0]) + ", m=" + f2.to_string()};
      return std::nullopt;
    case InstanceClassKind::same_size_stars:
      if (all_equal(n) && all_equal(m))
        return InstanceClass{kind, "s=" + std::to_string(s) + ", n=" + std::to_string(n[0]) +
                                       ", t=" + std::to_string(t) +
                                       ", m=" + std::to_string(m[0])};
      return std::nullopt;
    case InstanceClassKind::odd_stars_vs_forest:
      if (all_equal(n) && n[0] % 2 == 1 && m[0] % 2 == 1 && m.back() >= 2)
        return InstanceClass{kind, "s=" + std::to_string(s) + ", n=" + std::to_string(n[0]) +
                                       ", m=" + f2.to_string()};
      return std::nullopt;
    case InstanceClassKind::two_stars_vs_forest:
      if (s == 2 && n[0] == n[1] && m.back() >= 2)
        return InstanceClass{kind, "n=" + std::to_string(n[0]) + ", m=" + f2.to_string()};
      return std::nullopt;
    case InstanceClassKind::all_odd:
      if (all_odd(n) && all_odd(m))
        return InstanceClass{kind, "n=" + f1.to_string() + ", m=" + f2.to_string()};
      return std::nullopt;
    case InstanceClassKind::gyori_schelp_condition: {
      auto ls = l_sequence({f1, f2});
      long long tail = 0;
      bool ok = true;
      for (int i = static_cast<int>(ls.values.size()) - 1; i >= 0; --i) {
        tail += ls.values[i];
        long long lk = ls.values[i];
        if (lk * (lk - 1) / 2 <= tail) {
          ok = false;
          break;
        }
      }
      if (ok) return InstanceClass{kind, "binomial condition holds for all k"};
      return std::nullopt;
    }
    case InstanceClassKind::conjecture_only:
      return InstanceClass{kind, "no proved case matches"};
  }
  return std::nullopt;
}

constexpr InstanceClassKind kClassOrder[] = {
    InstanceClassKind::star_vs_forest,        InstanceClassKind::same_size_stars,
    InstanceClassKind::odd_stars_vs_forest,   InstanceClassKind::two_stars_vs_forest,
    InstanceClassKind::all_odd,               InstanceClassKind::gyori_schelp_condition,
    InstanceClassKind::conjecture_only,
};

}  // namespace

InstanceClass classify_instance(const StarForest& f1, const StarForest& f2) {
  for (auto kind : kClassOrder)
    if (auto match = try_match(kind, f1, f2)) return *match;
  throw std::logic_error("classify_instance: fallback missing");
}

std::vector<InstanceClass> all_matching_classes(const StarForest& f1, const StarForest& f2) {
  std::vector<InstanceClass> out;
  for (auto kind : kClassOrder)
    if (auto match = try_match(kind, f1, f2)) out.push_back(*match);
  return out;
}

namespace {

Graph union_of(const std::vector<Graph>& parts) {
  Graph g(0);
  for (const auto& part : parts) g = disjoint_union(g, part);
  return g;
}

void insert_unique(std::map<CanonicalCode, Graph>& set, Graph g) {
  auto code = canonical_form(g);
  set.emplace(std::move(code), std::move(g));
}

// Every way to pick K_{1,n+m_j-1} or (when n = m_j = 2) K_3 per component.
void star_vs_forest_family(int n, const std::vector<int>& ms,
                           std::map<CanonicalCode, Graph>& out) {
  int t = static_cast<int>(ms.size());
  std::vector<int> choice(t, 0);  // 0 = star, 1 = triangle
  for (;;) {
    std::vector<Graph> parts;
    for (int j = 0; j < t; ++j)
      parts.push_back(choice[j] ? make_complete(3) : make_star(n + ms[j] - 1));
    insert_unique(out, union_of(parts));

    int j = t - 1;
    while (j >= 0 && (choice[j] == 1 || !(n == 2 && ms[j] == 2))) {
      choice[j] = 0;
      --j;
    }
    if (j < 0) break;
    choice[j] = 1;
  }
}

void same_size_family(int s, int n, int t, int m, std::map<CanonicalCode, Graph>& out) {
  // Theorem orientation has n >= m.
  if (n < m) {
    std::swap(n, m);
    std::swap(s, t);
  }
  int copies = s + t - 1;
  insert_unique(out, union_of(std::vector<Graph>(copies, make_star(n + m - 1))));
  if (n == 2 && m == 2) {
    for (int l = 1; l <= copies; ++l) {
      std::vector<Graph> parts(l, make_complete(3));
      parts.insert(parts.end(), copies - l, make_star(3));
      insert_unique(out, union_of(parts));
    }
  }
  if (s == 1 && m == 1 && n == 2) {
    for (int l = 1; 2 * l <= t; ++l) {
      std::vector<Graph> parts(l, make_cycle(4));
      parts.insert(parts.end(), t - 2 * l, make_star(2));
      insert_unique(out, union_of(parts));
    }
  }
}

}  // namespace

std::vector<Graph> extremal_family(const InstanceClass& cls, const StarForest& f1,
                                   const StarForest& f2) {
  std::map<CanonicalCode, Graph> set;
  switch (cls.kind) {
    case InstanceClassKind::star_vs_forest:
      star_vs_forest_family(f1.sizes[0], f2.sizes, set);
      break;
    case InstanceClassKind::same_size_stars:
      same_size_family(f1.component_count(), f1.sizes[0], f2.component_count(), f2.sizes[0],
                       set);
      break;
    case InstanceClassKind::odd_stars_vs_forest: {
      int n = f1.sizes[0];
      std::vector<Graph> parts(f1.component_count() - 1, make_star(n + f2.sizes[0] - 1));
      for (int mj : f2.sizes) parts.push_back(make_star(n + mj - 1));
      insert_unique(set, union_of(parts));
      break;
    }
    default:
      throw std::invalid_argument(std::string("extremal_family: no proved characterization for ") +
                                  to_string(cls.kind));
  }

  long long total = conjectured_size_ramsey({f1, f2});
  std::vector<Graph> out;
  for (auto& [code, g] : set) {
    if (g.edge_count() != total)
      throw std::logic_error("extremal_family: member edge count mismatch");
    out.push_back(std::move(g));
  }
  return out;
}

ExhaustiveResult size_ramsey_exhaustive(const std::vector<StarForest>& forests,
                                        const ExhaustiveOptions& options) {
  if (options.max_edges > options.enum_budget)
    throw std::invalid_argument("size_ramsey_exhaustive: max_edges exceeds enumeration budget");

  GraphEnumerator enumerator(options.enum_budget);
  ExhaustiveResult result;

  for (int e = 1; e <= options.max_edges; ++e) {
    const auto& level = enumerator.level(e);
    std::vector<ArrowStatus> status(level.size());

    if (options.threads > 1) {
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= level.size()) return;
          status[i] = arrows(level[i], forests, options.per_graph).status;
        }
      };
      std::vector<std::thread> pool;
      for (int i = 0; i < options.threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    } else {
      for (std::size_t i = 0; i < level.size(); ++i)
        status[i] = arrows(level[i], forests, options.per_graph).status;
    }

    std::vector<Graph> minimal;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (status[i] == ArrowStatus::arrows) minimal.push_back(level[i]);
      if (status[i] == ArrowStatus::undecided) result.complete = false;
    }
    if (!minimal.empty()) {
      result.value = e;
      result.minimal_graphs = std::move(minimal);
      return result;
    }
  }
  return result;
}

CharacterizationReport verify_characterization(const StarForest& f1, const StarForest& f2,
                                               const ExhaustiveOptions& options) {
  CharacterizationReport report;
  report.cls = classify_instance(f1, f2);
  report.conjectured_total = conjectured_size_ramsey({f1, f2});
  report.predicted = extremal_family(report.cls, f1, f2);  // throws if unsupported

  ExhaustiveOptions opts = options;
  opts.max_edges = static_cast<int>(std::min<long long>(report.conjectured_total,
                                                        options.enum_budget));
  bool truncated = opts.max_edges < report.conjectured_total;
  auto exhaustive = size_ramsey_exhaustive({f1, f2}, opts);
  if (truncated) {
    exhaustive.complete = false;
    report.discrepancies.push_back("search truncated: enumeration budget " +
                                   std::to_string(options.enum_budget) +
                                   " below conjectured total " +
                                   std::to_string(report.conjectured_total));
  }

  report.exhaustive_value = exhaustive.value;
  report.found = std::move(exhaustive.minimal_graphs);
  report.complete = exhaustive.complete;

  std::map<CanonicalCode, const Graph*> predicted_set, found_set;
  for (const auto& g : report.predicted) predicted_set[canonical_form(g)] = &g;
  for (const auto& g : report.found) found_set[canonical_form(g)] = &g;

  report.equal = report.complete && report.exhaustive_value.has_value() &&
                 *report.exhaustive_value == report.conjectured_total &&
                 predicted_set.size() == found_set.size();
  for (const auto& [code, g] : predicted_set)
    if (!found_set.count(code)) {
      report.equal = false;
      report.discrepancies.push_back("predicted-only: " + graph6_encode(*g));
    }
  for (const auto& [code, g] : found_set)
    if (!predicted_set.count(code)) {
      report.equal = false;
      report.discrepancies.push_back("found-only: " + graph6_encode(*g));
    }
  if (report.exhaustive_value && *report.exhaustive_value != report.conjectured_total)
    report.discrepancies.push_back("value mismatch: exhaustive " +
                                   std::to_string(*report.exhaustive_value) + " vs conjectured " +
                                   std::to_string(report.conjectured_total));
  return report;
}

}  // namespace srn
