#include "nodal/comb_type.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace nodal {

namespace {

void check_matching(const std::vector<int>& tau, int lo, int hi, Validity& v, const std::string& what) {
  for (int i = lo; i < hi; ++i) {
    const int j = tau[i];
    if (j < lo || j >= hi) {
      v.valid = false;
      v.violations.push_back(what + ": ray " + std::to_string(i) + " leaves its block");
      continue;
    }
    if (j == i) {
      v.valid = false;
      v.violations.push_back(what + ": fixed point at " + std::to_string(i));
    } else if (tau[j] != i) {
      v.valid = false;
      v.violations.push_back(what + ": not an involution at " + std::to_string(i));
    } else if ((j - i) % 2 == 0) {
      v.valid = false;
      v.violations.push_back(what + ": even difference between " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
  for (int i = lo; i < hi; ++i) {
    const int ti = tau[i];
    if (ti <= i || ti >= hi) continue;
    for (int j = i + 1; j < ti; ++j) {
      const int tj = tau[j];
      if (tj > ti && tj < hi) {
        v.valid = false;
        v.violations.push_back(what + ": chords (" + std::to_string(i) + "," + std::to_string(ti) + ") and (" + std::to_string(j) + "," +
                               std::to_string(tj) + ") cross");
      }
    }
  }
}

// All non-crossing perfect matchings of [lo, hi) written into tau.
void matchings(int lo, int hi, std::vector<int>& tau, const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    tau[lo] = j;
    tau[j] = lo;
    matchings(lo + 1, j, tau, [&] { matchings(j + 1, hi, tau, emit); });
  }
}

Word renumber(const Word& w) {
  std::map<int, int> m;
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    auto it = m.find(x);
    if (it == m.end()) it = m.emplace(x, static_cast<int>(m.size()) + 1).first;
    out.push_back(it->second);
  }
  return out;
}

} // namespace

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Validity validate_interior(const InteriorType& t) {
  Validity v;
  if (t.p < 1 || static_cast<int>(t.tau.size()) != 2 * t.p) {
    v.valid = false;
    v.violations.push_back("tau must have 2p entries with p >= 1");
    return v;
  }
  check_matching(t.tau, 0, 2 * t.p, v, "tau");
  return v;
}

InteriorType interior_from_pairs(int p, const std::vector<std::pair<int, int>>& pairs, IndexBase base) {
  InteriorType t;
  t.p = p;
  t.tau.assign(2 * p, -1);
  const int off = static_cast<int>(base);
  for (auto [a, b] : pairs) {
    a -= off;
    b -= off;
    if (a < 0 || b < 0 || a >= 2 * p || b >= 2 * p) throw InvalidType("pair index out of range");
    t.tau[a] = b;
    t.tau[b] = a;
  }
  return t;
}

std::vector<std::pair<int, int>> interior_pairs(const InteriorType& t, IndexBase base) {
  std::vector<std::pair<int, int>> out;
  const int off = static_cast<int>(base);
  for (int i = 0; i < static_cast<int>(t.tau.size()); ++i)
    if (t.tau[i] > i) out.emplace_back(i + off, t.tau[i] + off);
  return out;
}

std::vector<InteriorType> enumerate_interior(int p, int cap) {
  if (p < 1) throw InvalidType("p must be positive");
  if (p > cap) throw CapExceeded("p = " + std::to_string(p) + " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<InteriorType> out;
  std::vector<int> tau(2 * p, -1);
  matchings(0, 2 * p, tau, [&] { out.push_back({p, tau}); });
  std::sort(out.begin(), out.end());
  return out;
}

Validity validate_labeling(const DomainLabeling& d) {
  Validity v;
  const int n = static_cast<int>(d.delta.size());
  if (n < 2 || n % 2) {
    v.valid = false;
    v.violations.push_back("labeling must have an even positive number of intervals");
    return v;
  }
  const int p = n / 2;
  std::vector<char> used(p + 2, 0);
  for (int j = 0; j < n; ++j) {
    const int x = d.delta[j];
    if (x < 1 || x > p + 1) {
      v.valid = false;
      v.violations.push_back("label " + std::to_string(x) + " outside 1.." + std::to_string(p + 1));
      continue;
    }
    used[x] = 1;
    if (d.delta[j] == d.delta[(j + 1) % n]) {
      v.valid = false;
      v.violations.push_back("adjacent intervals " + std::to_string(j) + " and " + std::to_string((j + 1) % n) + " share a label");
    }
  }
  for (int x = 1; x <= p + 1; ++x)
    if (!used[x]) {
      v.valid = false;
      v.violations.push_back("label " + std::to_string(x) + " unused");
    }
  return v;
}

DomainLabeling labeling_from_type(const InteriorType& t) {
  const Validity v = validate_interior(t);
  if (!v.valid) throw InvalidType(v.violations.front());
  const int n = 2 * t.p;
  std::vector<int> delta(n, 0);
  int next = 1;
  for (int i = 0; i < n; ++i) {
    if (t.tau[i] > i) {
      delta[i] = next++;
    } else {
      const int before = (t.tau[i] + n - 1) % n;
      if (delta[before] == 0) delta[before] = next++;
      delta[i] = delta[before];
    }
  }
  return {delta};
}

InteriorType type_from_labeling(const DomainLabeling& d) {
  const Validity v = validate_labeling(d);
  if (!v.valid) throw InconsistentLabeling(v.violations.front());
  const int n = static_cast<int>(d.delta.size());
  InteriorType t;
  t.p = n / 2;
  t.tau.assign(n, -1);
  // Rays [lo, hi) form complete loops; gaps lo..hi-2 lie inside the enclosing domain's span.
  std::function<void(int, int)> parse = [&](int lo, int hi) {
    while (lo < hi) {
      int last = -1;
      for (int j = lo; j <= hi - 2; ++j)
        if (d.delta[j] == d.delta[lo]) last = j;
      const int close = last + 1;
      if (last < 0 || close >= hi || (close - lo) % 2 == 0)
        throw InconsistentLabeling("no loop closes the domain opened at ray " + std::to_string(lo));
      t.tau[lo] = close;
      t.tau[close] = lo;
      parse(lo + 1, close);
      lo = close + 1;
    }
  };
  parse(0, n);
  if (!validate_interior(t).valid || labeling_from_type(t).delta != renumber(d.delta))
    throw InconsistentLabeling("labeling is not realised by any bouquet of loops");
  return t;
}

InteriorType rotate_type(const InteriorType& t, int shift) {
  const Validity v = validate_interior(t);
  if (!v.valid) throw InvalidType(v.violations.front());
  const int n = 2 * t.p;
  const int s = ((shift % n) + n) % n;
  InteriorType r{t.p, std::vector<int>(n)};
  for (int j = 0; j < n; ++j) r.tau[j] = (t.tau[(j - s + n) % n] + s) % n;
  return r;
}

std::vector<InteriorType> shift_invariant_types(int p, int cap) {
  std::vector<InteriorType> out;
  for (const auto& t : enumerate_interior(p, cap))
    if (rotate_type(t, 1) == t) out.push_back(t);
  return out;
}

BoundaryType boundary_from_pairs(int k, int arcIndex, const std::vector<std::pair<int, int>>& pairs, IndexBase base) {
  if (k < 3) throw InvalidType("boundary types need k >= 3");
  BoundaryType t;
  t.k = k;
  const int off = static_cast<int>(base);
  t.arc = arcIndex - off;
  t.tau.assign(2 * k - 3, -2);
  if (t.arc < 0 || t.arc >= t.ray_count()) throw InvalidType("arc index out of range");
  t.tau[t.arc] = -1;
  for (auto [a, b] : pairs) {
    a -= off;
    b -= off;
    if (a < 0 || b < 0 || a >= t.ray_count() || b >= t.ray_count()) throw InvalidType("pair index out of range");
    t.tau[a] = b;
    t.tau[b] = a;
  }
  return t;
}

Validity validate_boundary(const BoundaryType& t) {
  Validity v;
  if (t.k < 3 || static_cast<int>(t.tau.size()) != t.ray_count()) {
    v.valid = false;
    v.violations.push_back("need k >= 3 and 2k-3 rays");
    return v;
  }
  if (t.arc < 0 || t.arc >= t.ray_count()) {
    v.valid = false;
    v.violations.push_back("arc index out of range");
    return v;
  }
  if (t.arc % 2 != 0) {
    v.valid = false;
    v.violations.push_back("arc index " + std::to_string(t.arc + 1) + " is even");
  }
  for (int r = 0; r < t.ray_count(); ++r) {
    if (r == t.arc) {
      if (t.tau[r] != -1) {
        v.valid = false;
        v.violations.push_back("the arc ray must map to the boundary");
      }
    } else if (t.tau[r] < 0 || t.tau[r] == t.arc) {
      v.valid = false;
      v.violations.push_back("ray " + std::to_string(r + 1) + " is unmatched");
    }
  }
  if (!v.valid) return v;
  check_matching(t.tau, 0, t.arc, v, "K+");
  check_matching(t.tau, t.arc + 1, t.ray_count(), v, "K-");
  return v;
}

std::vector<BoundaryType> enumerate_boundary(int k, int cap) {
  if (k < 3) throw InvalidType("boundary types need k >= 3");
  if (k - 1 > cap) throw CapExceeded("k = " + std::to_string(k) + " exceeds the enumeration cap");
  std::vector<BoundaryType> out;
  const int n = 2 * k - 3;
  for (int arc = 0; arc < n; arc += 2) {
    std::vector<int> tau(n, -1);
    matchings(0, arc, tau, [&] {
      matchings(arc + 1, n, tau, [&] {
        BoundaryType t{k, arc, tau};
        t.tau[arc] = -1;
        out.push_back(t);
      });
    });
  }
  return out;
}

Word word_from_string(const std::string& s) {
  Word w;
  if (s.find_first_of(" ,\t") != std::string::npos) {
    std::string norm = s;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    int x;
    while (in >> x) w.push_back(x);
    if (!in.eof()) throw MalformedInput("word contains a non-numeric token");
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw MalformedInput(std::string("word contains '") + c + "'");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string word_to_string(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

bool word_valid(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

BoundaryWords boundary_words(const BoundaryType& t) {
  const Validity v = validate_boundary(t);
  if (!v.valid) throw InvalidType(v.violations.front());
  // Domain ids: 0 = outer domain before the arc, 1 = outer domain after it, then loops.
  std::vector<int> stack;
  int outer = 0, nextId = 2;
  Word raw;
  const int intervals = 2 * t.k - 2;
  for (int j = 1; j <= intervals; ++j) {
    if (j >= 2) {
      const int r = j - 2;
      if (r == t.arc) {
        outer = 1;
      } else if (t.tau[r] > r) {
        stack.push_back(nextId++);
      } else {
        stack.pop_back();
      }
    }
    raw.push_back(stack.empty() ? outer : stack.back());
  }
  BoundaryWords out;
  out.mTheta = renumber(raw);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == 0) out.plusLabel = out.mTheta[i];
    if (raw[i] == 1) out.minusLabel = out.mTheta[i];
  }
  const int aPlus = t.arc / 2; // (a-1)/2 with the one-based arc index a
  out.mZero = out.mTheta;
  out.mZero.insert(out.mZero.begin(), aPlus + 2);
  out.mPi = out.mTheta;
  out.mPi.push_back(1);
  return out;
}

std::optional<int> try_first_repeat(const Word& w) {
  if (w.empty()) throw NoRepeat("empty word");
  for (size_t j = 1; j < w.size(); ++j)
    if (w[j] == w[0]) return static_cast<int>(j) + 1;
  return std::nullopt;
}

int first_repeat(const Word& w) {
  auto r = try_first_repeat(w);
  if (!r) throw NoRepeat("first letter of " + word_to_string(w) + " never recurs");
  return *r;
}

RotatingLimitReport rotating_limit_check(const BoundaryType& t) {
  const BoundaryWords w = boundary_words(t);
  RotatingLimitReport r;
  r.zeroPosition = first_repeat(w.mZero);
  r.piPosition = first_repeat(w.mPi);
  const int a = t.arc_index(IndexBase::One);
  const int pPlus = a - 2;
  r.predictedZero = 4 + pPlus;
  r.predictedPi = 2 + pPlus;
  r.distinct = r.zeroPosition != r.piPosition;
  r.differenceIsTwo = r.zeroPosition - r.piPosition == 2;
  r.matchesPrediction = r.zeroPosition == r.predictedZero && r.piPosition == r.predictedPi;
  r.pass = r.distinct;
  return r;
}

Word canonical_word(const Word& w) { return renumber(w); }

PatternComparison compare_patterns(const Word& wL, const Word& wR) {
  PatternComparison c;
  if (canonical_word(wL) == canonical_word(wR)) {
    c.equal = true;
    return c;
  }
  if (wL.size() != wR.size()) {
    c.witness = "length";
    c.detail = std::to_string(wL.size()) + " vs " + std::to_string(wR.size());
    return c;
  }
  const auto fl = try_first_repeat(wL), fr = try_first_repeat(wR);
  if (fl != fr) {
    c.witness = "first_repeat";
    c.detail = (fl ? std::to_string(*fl) : std::string("none")) + " vs " + (fr ? std::to_string(*fr) : std::string("none"));
    return c;
  }
  c.witness = "labels";
  c.detail = "no label bijection maps " + word_to_string(wL) + " to " + word_to_string(wR);
  return c;
}

} // namespace nodal
