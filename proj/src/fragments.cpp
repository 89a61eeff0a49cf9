#include "kcon/fragments.hpp"

#include <algorithm>

#include "kcon/error.hpp"

namespace kcon {

CutDecomposition decompose(const Graph& g, VertexSet s) {
  if (g.order() == 0 || g.is_complete()) {
    check_range(g, s);
    return decompose(g, s, g.order() - 1);
  }
  return decompose(g, s, kappa(g).value);
}

CutDecomposition decompose(const Graph& g, VertexSet s, int kappa_value) {
  check_range(g, s);
  if (s == g.vertices()) fail(ErrorCode::InvalidArgument, "cut must leave at least one vertex");
  CutDecomposition dec;
  dec.host = g.fingerprint();
  dec.cut = s;
  dec.components = g.components(g.vertices() - s);
  dec.is_cut = dec.components.size() >= 2;
  dec.is_minimum = dec.is_cut && s.size() == kappa_value;
  return dec;
}

SemifragmentList semifragments(const CutDecomposition& dec) {
  const int c = static_cast<int>(dec.components.size());
  if (c < 2) fail(ErrorCode::InvalidArgument, "semifragments need at least two components");
  VertexSet rest;
  for (VertexSet comp : dec.components) rest |= comp;

  SemifragmentList out;
  auto emit = [&](VertexSet part) {
    Fragment f;
    f.host = dec.host;
    f.cut = dec.cut;
    f.part = part;
    f.complement = rest - part;
    f.is_fragment = dec.is_minimum;
    out.items.push_back(f);
  };
  if (c > kMaxSemifragmentComponents) {
    out.truncated = true;
    for (VertexSet comp : dec.components) {
      emit(comp);
      emit(rest - comp);
    }
  } else {
    const std::uint32_t full = (std::uint32_t{1} << c) - 1;
    for (std::uint32_t pick = 1; pick < full; ++pick) {
      VertexSet part;
      for (int i = 0; i < c; ++i)
        if ((pick >> i) & 1U) part |= dec.components[i];
      emit(part);
    }
  }
  std::sort(out.items.begin(), out.items.end(),
            [](const Fragment& a, const Fragment& b) { return lex_less(a.part, b.part); });
  return out;
}

FragmentCatalogue fragment_catalogue(const Graph& g, CutOptions opts) {
  if (g.order() == 0 || g.is_complete())
    fail(ErrorCode::InvalidArgument, "complete graphs have no fragments");
  FragmentCatalogue cat;
  cat.kappa = kappa(g).value;
  cat.min_cuts = all_min_cuts(g, cat.kappa, opts);
  for (VertexSet s : cat.min_cuts) {
    auto list = semifragments(decompose(g, s, cat.kappa));
    cat.fragments.insert(cat.fragments.end(), list.items.begin(), list.items.end());
  }
  std::sort(cat.fragments.begin(), cat.fragments.end(), [](const Fragment& a, const Fragment& b) {
    if (a.part != b.part) return lex_less(a.part, b.part);
    return lex_less(a.cut, b.cut);
  });
  int smallest = g.order();
  for (const auto& f : cat.fragments) smallest = std::min(smallest, f.order());
  for (auto& f : cat.fragments) {
    f.is_minimal = std::none_of(cat.fragments.begin(), cat.fragments.end(), [&](const Fragment& o) {
      return o.part != f.part && o.part.subset_of(f.part);
    });
    f.is_minimum = f.order() == smallest;
  }
  return cat;
}

std::vector<Fragment> minimal_fragments(const Graph& g, CutOptions opts) {
  auto cat = fragment_catalogue(g, opts);
  std::vector<Fragment> out;
  std::copy_if(cat.fragments.begin(), cat.fragments.end(), std::back_inserter(out),
               [](const Fragment& f) { return f.is_minimal; });
  return out;
}

Fragment minimum_fragment(const Graph& g, CutOptions opts) {
  auto cat = fragment_catalogue(g, opts);
  auto it = std::find_if(cat.fragments.begin(), cat.fragments.end(),
                         [](const Fragment& f) { return f.is_minimum; });
  // Catalogue order is lexicographic, so the first minimum one wins ties.
  return *it;
}

VertexSet s_operator(VertexSet s1, VertexSet f1, VertexSet s2, VertexSet f2) {
  return (s1 & f2) | (s1 & s2) | (s2 & f1);
}

VertexSet s_operator(const Fragment& f1, const Fragment& f2) {
  if (f1.host != f2.host) fail(ErrorCode::HostMismatch, "fragments belong to different graphs");
  return s_operator(f1.cut, f1.part, f2.cut, f2.part);
}

int PropertyReport::violations() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const PropertyCheck& c) { return !c.holds; }));
}

PropertyReport check_lemma21(const Graph& g, CutOptions opts) {
  auto cat = fragment_catalogue(g, opts);
  const int k = cat.kappa;
  if (k < 1) fail(ErrorCode::HypothesisNotMet, "graph is not connected");
  PropertyReport report;
  for (const Fragment& f : cat.fragments) {
    Graph h = induced_subgraph(clique_augment(g, f.cut), f.cut | f.part).graph;
    PropertyCheck a{f.cut, f.part, "lemma21a", is_k_connected(h, k), ""};
    a.detail = "kappa(G<S>[S+F]) >= " + std::to_string(k);
    report.checks.push_back(a);
    if (f.is_minimal && f.order() >= 2) {
      PropertyCheck b{f.cut, f.part, "lemma21b", is_k_connected(h, k + 1), ""};
      b.detail = "kappa(G<S>[S+F]) >= " + std::to_string(k + 1);
      report.checks.push_back(b);
    }
  }
  return report;
}

namespace {

bool is_semifragment(const Graph& g, VertexSet s, VertexSet f) {
  VertexSet rest = g.vertices() - s;
  return !f.empty() && f.subset_of(rest) && f != rest && g.neighbors(f).subset_of(s);
}

}  // namespace

bool lemma22_side_hypothesis(const Graph& g, VertexSet s, VertexSet f, int k) {
  Graph aug = clique_augment(g, s);
  VertexSet fbar = g.vertices() - s - f;
  return is_k_connected(remove_vertices(aug, f).graph, k) &&
         is_k_connected(remove_vertices(aug, fbar).graph, k);
}

PropertyReport check_lemma22(const Graph& g, const TwoCutInput& in) {
  const int k = in.k;
  check_range(g, in.s | in.f | in.s1 | in.f1);
  if (k < 1 || in.s.size() != k || in.s1.size() != k - 1)
    fail(ErrorCode::InvalidArgument, "need |S| = k >= 1 and |S1| = k-1");
  if (g.connected_within(g.vertices() - in.s) || !is_semifragment(g, in.s, in.f))
    fail(ErrorCode::HypothesisNotMet, "F is not a semifragment to the cut S");
  if (g.connected_within(g.vertices() - in.s1) || !is_semifragment(g, in.s1, in.f1))
    fail(ErrorCode::HypothesisNotMet, "F1 is not a semifragment to the cut S1");
  if (!lemma22_side_hypothesis(g, in.s, in.f, k))
    fail(ErrorCode::HypothesisNotMet, "G<S>-F or G<S>-Fbar is not k-connected");

  const VertexSet fbar = g.vertices() - in.s - in.f;
  const VertexSet f1bar = g.vertices() - in.s1 - in.f1;
  const VertexSet t = s_operator(in.s, in.f, in.s1, in.f1);

  PropertyReport report;
  const bool meet = in.f.intersects(in.f1);
  PropertyCheck a{in.s, in.f, "lemma22a", !meet || t.size() >= k, ""};
  a.detail = "F&F1 " + std::string(meet ? "nonempty" : "empty") + ", |S(F,F1)|=" +
             std::to_string(t.size());
  report.checks.push_back(a);

  const int s1_f = (in.s1 & in.f).size();
  const int s_f1bar = (in.s & f1bar).size();
  const int s_f1 = (in.s & in.f1).size();
  const int s1_fbar = (in.s1 & fbar).size();
  const bool outer_empty = !fbar.intersects(f1bar);
  const bool big = t.size() >= k;
  PropertyCheck b{in.s, in.f, "lemma22b",
               !big || (s1_f >= s_f1bar && s_f1 > s1_fbar && outer_empty), ""};
  b.detail = "|S(F,F1)|=" + std::to_string(t.size()) + " |S1&F|=" + std::to_string(s1_f) +
             " |S&F1bar|=" + std::to_string(s_f1bar) + " |S&F1|=" + std::to_string(s_f1) +
             " |S1&Fbar|=" + std::to_string(s1_fbar) +
             " Fbar&F1bar=" + std::string(outer_empty ? "empty" : "nonempty");
  report.checks.push_back(b);
  return report;
}

void to_json(nlohmann::json& j, const PropertyCheck& c) {
  j = nlohmann::json{{"cut", c.cut.to_vector()},
                     {"fragment", c.fragment.to_vector()},
                     {"property", c.property},
                     {"holds", c.holds},
                     {"detail", c.detail}};
}

void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = nlohmann::json::array();
  for (const auto& c : r.checks) j.push_back(c);
}

void to_json(nlohmann::json& j, const Fragment& f) {
  j = nlohmann::json{{"cut", f.cut.to_vector()},
                     {"fragment", f.part.to_vector()},
                     {"complement", f.complement.to_vector()},
                     {"is_fragment", f.is_fragment},
                     {"is_minimal", f.is_minimal},
                     {"is_minimum", f.is_minimum}};
}

}  // namespace kcon
