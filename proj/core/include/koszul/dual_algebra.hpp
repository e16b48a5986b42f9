#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/layered_graph.hpp"
#include "koszul/quotient.hpp"
#include "koszul/regular_cw.hpp"

namespace koszul {

// Descending cover chain x_0 > x_1 > ... avoiding the minimum, as vertex
// indices of the ambient graph. The empty word spans degree 0.
using PathWord = std::vector<std::size_t>;

// "x0.x1.x2" by vertex id; "1" for the empty word.
std::string word_label(const LayeredGraph& g, const PathWord& w);

// Path words of the given length, lexicographic by id. If `leading` is set,
// only words starting at those vertices are listed.
std::vector<PathWord> path_words(const LayeredGraph& g, std::size_t length,
                                 const std::optional<std::vector<std::size_t>>& leading = std::nullopt);

// A span of path words modulo the quadratic relations that live in it.
//
// Relations: for each position j >= 1, the sum of the words that agree
// outside j. This is a basis-free description of the ideal in degree m
// restricted to words with the listed leading vertices, and the ideal is
// homogeneous in the leading vertex.
template <class Field>
struct WordSpace {
  std::vector<PathWord> words;
  QuotientPresentation<Field> presentation;

  std::size_t dim() const { return presentation.dim(); }
  // Ambient coordinate of w, or words.size() if w is not listed.
  std::size_t find(const PathWord& w) const;
};

template <class Field>
WordSpace<Field> word_space(const LayeredGraph& g, std::size_t length,
                            const std::optional<std::vector<std::size_t>>& leading, const Field& field);

// The complex R(., k) of a layered graph: R(n,k) is spanned by words of
// length n-k+1 starting at rank n+1, and d prepends each upper cover.
// spaces[n - k], maps[n - k] for n = k..max_rank-1.
template <class Field>
struct RnkComplex {
  int k = 0;
  int top = 0;  // max_rank - 1
  std::vector<WordSpace<Field>> spaces;
  std::vector<SparseMatrix<Field>> maps;

  const WordSpace<Field>& at(int n) const { return spaces.at(static_cast<std::size_t>(n - k)); }
};

template <class Field>
RnkComplex<Field> rnk_complex(const LayeredGraph& g, int k, const Field& field);

// dim R_m for m = 0..max_rank (R_m vanishes beyond).
std::vector<std::size_t> graded_dims(const LayeredGraph& g, const FieldSpec& field);
// dim H^n(R(., k)) for n = k..max_rank-1, indexed by n - k.
std::vector<std::size_t> rnk_cohomology_dims(const LayeredGraph& g, int k, const FieldSpec& field);

struct KoszulWitness {
  VertexId vertex;
  int n = 0;
  int k = 0;
  std::size_t dim = 0;
  std::vector<Term> representative;  // over path words of the interval
};

struct VertexCheck {
  VertexId vertex;
  int rank = 0;
  bool passed = true;
  // (n, k, dim H^n(R(., k))) for every nonzero group of [0, vertex].
  std::vector<std::tuple<int, int, std::size_t>> nonzero;
};

struct KoszulVerdict {
  bool koszul = true;
  FieldSpec field = FieldSpec::rationals();
  std::optional<KoszulWitness> witness;
  std::vector<VertexCheck> log;  // in (rank, id) order, up to the first failure
  // Whole-graph criterion, computed only on request.
  std::optional<bool> whole_graph_koszul;
};

struct KoszulOptions {
  bool whole_graph_check = false;
};

// Decides Koszulity of the dual algebra by checking, for each vertex x in
// (rank, id) order, that H^n(R(., k)) of [0, x] vanishes for n != k.
// Throws HypothesisError (naming the vertex and its classes) if g is not
// uniform.
KoszulVerdict koszul_decide(const LayeredGraph& g, const FieldSpec& field, const KoszulOptions& options = {});

struct AnnihilatorDegree {
  int m = 0;
  std::size_t kernel_dim = 0;
  std::size_t ideal_dim = 0;
};

struct AnnihilatorReport {
  VertexId vertex;
  int n = 0;
  bool holds = true;
  bool vacuous = false;  // n = rank(x): r_x(n) is zero
  std::vector<AnnihilatorDegree> degrees;
};

// Compares the left annihilator of r_x(n) with r_x(n+1) R + sum over
// y not in S_x(n+1) of r_y R, degree by degree. InputError for unknown x,
// the minimum, or n outside 0..rank(x).
AnnihilatorReport annihilator_check(const LayeredGraph& g, const FieldSpec& field, const VertexId& x, int n);

// Every (x, n) in (rank, id, n) order, or only the given n.
std::vector<AnnihilatorReport> annihilator_check_all(const LayeredGraph& g, const FieldSpec& field,
                                                     std::optional<int> only_n = std::nullopt);

// Product of incidences along a descending chain of cells, each a
// codimension-one face of the previous; InputError otherwise.
int sign_of_path(const RegularCWComplex& x, const std::vector<CellId>& chain);

// Phi(n, k) : L_X(n,k) -> R(n,k) of the face poset, v(b,a) mapped to the
// signed word of the lexicographically first maximal chain from b to a.
template <class Field>
struct PhiBlock {
  int n = 0;
  int k = 0;
  QuotientPresentation<Field> source;
  WordSpace<Field> target;
  SparseMatrix<Field> map;  // quotient coordinates
};

template <class Field>
PhiBlock<Field> phi_block(const RegularCWComplex& x, int n, int k, const Field& field);

struct PhiEntry {
  int n = 0;
  int k = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool iso() const { return source_dim == target_dim && rank == source_dim; }
};

struct PhiReport {
  bool iso = true;
  bool chain_map = true;  // commutes with the horizontal differentials
  std::vector<PhiEntry> entries;
};

PhiReport phi_iso_check(const RegularCWComplex& x, const FieldSpec& field);

}  // namespace koszul
