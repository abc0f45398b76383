#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nodal {

enum class IndexBase { Zero = 0, One = 1 };

// Fixed-point-free non-crossing involution on the 2p rays at an interior singular point.
struct InteriorType {
  int p = 0;
  std::vector<int> tau; // 0-based, size 2p

  bool operator==(const InteriorType&) const = default;
  auto operator<=>(const InteriorType& o) const { return tau <=> o.tau; }
};

struct Validity {
  bool valid = true;
  std::vector<std::string> violations;
};

Validity validate_interior(const InteriorType& t);

// Builds a type from chord pairs given in the chosen index base.
InteriorType interior_from_pairs(int p, const std::vector<std::pair<int, int>>& pairs, IndexBase base = IndexBase::Zero);
std::vector<std::pair<int, int>> interior_pairs(const InteriorType& t, IndexBase base = IndexBase::Zero);

inline constexpr int kDefaultEnumerationCap = 10;

std::vector<InteriorType> enumerate_interior(int p, int cap = kDefaultEnumerationCap);

struct DomainLabeling {
  std::vector<int> delta; // labels 1..p+1 of the intervals 0..2p-1

  bool operator==(const DomainLabeling&) const = default;
};

Validity validate_labeling(const DomainLabeling& d);

DomainLabeling labeling_from_type(const InteriorType& t);
InteriorType type_from_labeling(const DomainLabeling& d);

InteriorType rotate_type(const InteriorType& t, int shift);

std::vector<InteriorType> shift_invariant_types(int p, int cap = kDefaultEnumerationCap);

// Type at a boundary singular point with k-related ray count 2k-3. Rays are
// stored 0-based (ray r here is ray r+1 in the one-based picture); `arc` is the
// ray whose arc ends on the boundary elsewhere (the down arrow).
struct BoundaryType {
  int k = 0;
  int arc = 0;
  std::vector<int> tau; // size 2k-3; tau[arc] == -1

  int ray_count() const { return 2 * k - 3; }
  int arc_index(IndexBase base) const { return arc + static_cast<int>(base); }
  bool operator==(const BoundaryType&) const = default;
};

// pairs are chords between rays (one-based by default, as in the matrix notation).
BoundaryType boundary_from_pairs(int k, int arcIndex, const std::vector<std::pair<int, int>>& pairs,
                                 IndexBase base = IndexBase::One);

Validity validate_boundary(const BoundaryType& t);

std::vector<BoundaryType> enumerate_boundary(int k, int cap = kDefaultEnumerationCap);

using Word = std::vector<int>;

Word word_from_string(const std::string& s); // "121343" or "1 2 1 3 4 3"
std::string word_to_string(const Word& w);
bool word_valid(const Word& w);

struct BoundaryWords {
  Word mTheta;
  Word mZero;
  Word mPi;
  int plusLabel = 0;  // label of the outer domain before the arc
  int minusLabel = 0; // label of the outer domain after the arc
};

BoundaryWords boundary_words(const BoundaryType& t);

// 1-based position of the first recurrence of the first letter.
int first_repeat(const Word& w);
std::optional<int> try_first_repeat(const Word& w);

struct RotatingLimitReport {
  int zeroPosition = 0;
  int piPosition = 0;
  int predictedZero = 0; // 4 + |p_+|
  int predictedPi = 0;   // 2 + |p_+|
  bool distinct = false;
  bool differenceIsTwo = false;
  bool matchesPrediction = false;
  bool pass = false; // the positions differ
};

RotatingLimitReport rotating_limit_check(const BoundaryType& t);

struct PatternComparison {
  bool equal = false;
  std::string witness; // "length", "first_repeat", "labels" or empty when equal
  std::string detail;
};

// Labels are compared up to bijection through first-occurrence renumbering.
Word canonical_word(const Word& w);
PatternComparison compare_patterns(const Word& wL, const Word& wR);

long long catalan(int n);

} // namespace nodal
