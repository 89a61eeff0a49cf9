#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcon/connectivity.hpp"
#include "kcon/graph.hpp"

namespace kcon {

// A vertex set S together with the components of G - S.
struct CutDecomposition {
  std::uint64_t host = 0;  // Graph::fingerprint of the decomposed graph
  VertexSet cut;
  std::vector<VertexSet> components;  // sorted by least vertex
  bool is_cut = false;                // at least two components
  bool is_minimum = false;            // |cut| == kappa(G)
};

// Semifragment F of G to S with its complement. `is_fragment` marks S as a
// minimum cut; the minimal/minimum flags are global over all minimum cuts.
struct Fragment {
  std::uint64_t host = 0;
  VertexSet cut;
  VertexSet part;
  VertexSet complement;
  bool is_fragment = false;
  bool is_minimal = false;
  bool is_minimum = false;

  int order() const { return part.size(); }
};

CutDecomposition decompose(const Graph& g, VertexSet s);
CutDecomposition decompose(const Graph& g, VertexSet s, int kappa_value);

inline constexpr int kMaxSemifragmentComponents = 20;

struct SemifragmentList {
  std::vector<Fragment> items;  // sorted lexicographically by part
  bool truncated = false;       // more than 20 components: singles and complements only
};

// Throws InvalidArgument when dec has fewer than two components.
SemifragmentList semifragments(const CutDecomposition& dec);

struct FragmentCatalogue {
  int kappa = 0;
  std::vector<VertexSet> min_cuts;
  std::vector<Fragment> fragments;  // every fragment over every minimum cut, lexicographic
};

// All fragments with minimal/minimum flags filled. Throws TooLarge, or
// InvalidArgument on complete graphs.
FragmentCatalogue fragment_catalogue(const Graph& g, CutOptions opts = {});
std::vector<Fragment> minimal_fragments(const Graph& g, CutOptions opts = {});
// Smallest order, ties broken by lexicographic vertex set.
Fragment minimum_fragment(const Graph& g, CutOptions opts = {});

// S(F1,F2) = (S1 & F2) | (S1 & S2) | (S2 & F1), also written S(F1 u F2);
// both denote the same set. Throws HostMismatch.
VertexSet s_operator(const Fragment& f1, const Fragment& f2);
VertexSet s_operator(VertexSet s1, VertexSet f1, VertexSet s2, VertexSet f2);

struct PropertyCheck {
  VertexSet cut;
  VertexSet fragment;
  std::string property;
  bool holds = true;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  int violations() const;
  bool ok() const { return violations() == 0; }
};

// For every minimum cut S and fragment F: kappa(G<S>[S u F]) >= k, and
// >= k+1 when F is minimal with |F| >= 2.
PropertyReport check_lemma21(const Graph& g, CutOptions opts = {});

struct TwoCutInput {
  VertexSet s;
  VertexSet f;
  VertexSet s1;
  VertexSet f1;
  int k = 0;
};

// Hypotheses: S and S1 are vertex cuts with |S| = k, |S1| = k-1; F and F1 are
// semifragments to them; G<S> - F and G<S> - Fbar are k-connected. Throws
// HypothesisNotMet when one fails, InvalidArgument on size mismatch.
PropertyReport check_lemma22(const Graph& g, const TwoCutInput& in);

// Cheap part of the two-cut hypotheses that depends only on (S, F).
bool lemma22_side_hypothesis(const Graph& g, VertexSet s, VertexSet f, int k);

void to_json(nlohmann::json& j, const PropertyCheck& c);
void to_json(nlohmann::json& j, const PropertyReport& r);
void to_json(nlohmann::json& j, const Fragment& f);

}  // namespace kcon
