#include "pdm/monoids.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <ostream>

namespace pdm {

namespace {

constexpr int8_t kUnset = -128;
constexpr int kMaxWord = 127;  // packed partner codes are int8

uint64_t fnv1a(const int8_t* data, size_t len) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= static_cast<uint8_t>(data[i]);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Word family_word(FamilyTag family, long n) {
  if (n < 1) fail(errc::bad_parameters, "family word needs n >= 1");
  Word w;
  if (family_traits(family).pivotal) {
    w.assign(2 * n, 0);
  } else {
    w.reserve(2 * n);
    for (long i = 0; i < n; ++i) {
      w.push_back(1);
      w.push_back(2);
    }
  }
  return w;
}

int MonoidTable::id_of_packed(const int8_t* r) const {
  size_t bytes = 2 * static_cast<size_t>(m);
  uint64_t h = fnv1a(r, bytes) & slot_mask;
  for (;;) {
    int32_t id = slots[h];
    if (id < 0) return -1;
    if (std::memcmp(rep(id), r, bytes) == 0) return id;
    h = (h + 1) & slot_mask;
  }
}

int MonoidTable::id_of(const Diagram& d) const {
  if (d.nb() != m || d.nt() != m) return -1;
  std::vector<int8_t> r(2 * m);
  for (int i = 0; i < m; ++i) r[i] = static_cast<int8_t>(d.bpart[i]);
  for (int i = 0; i < m; ++i) r[m + i] = static_cast<int8_t>(d.tpart[i]);
  return id_of_packed(r.data());
}

namespace {

struct Generator {
  const FamilyTraits& tr;
  const Word& word;  // endomorphism word, both boundaries
  int m, L;          // word length, boundary length 2m
  std::vector<int> part;  // linear partner, 1-based, 0 = dot
  std::vector<int> stack;
  std::vector<Diagram>* out;

  int letter(int i) const { return i <= m ? word[i - 1] : word[2 * m - i]; }

  bool close_ok(int j, int i) const {
    if (j <= m && i <= m)
      return tr.allow_arcs && letter(j) == letter(i) + tr.arc_shift;
    if (j <= m)  // through strand
      return letter(j) == letter(i);
    return tr.allow_arcs && letter(i) + tr.arc_shift == letter(j);
  }

  void emit() {
    Diagram d;
    d.bottom = d.top = word;
    d.bpart.assign(m, 0);
    d.tpart.assign(m, 0);
    for (int i = 1; i <= L; ++i) {
      int j = part[i];
      if (j == 0 || j > i) continue;  // dot, or handled at the close end
      if (j <= m && i <= m) {
        d.bpart[j - 1] = -i;
        d.bpart[i - 1] = -j;
      } else if (j <= m) {
        int q = L + 1 - i;
        d.bpart[j - 1] = q;
        d.tpart[q - 1] = j;
      } else {
        int qa = L + 1 - j, qb = L + 1 - i;
        d.tpart[qa - 1] = -qb;
        d.tpart[qb - 1] = -qa;
      }
    }
    out->push_back(std::move(d));
  }

  void rec(int i) {
    if (i > L) {
      if (stack.empty()) emit();
      return;
    }
    if (static_cast<int>(stack.size()) > L - i + 1) return;  // cannot close all
    if (!stack.empty() && close_ok(stack.back(), i)) {
      int j = stack.back();
      stack.pop_back();
      part[i] = j;
      part[j] = i;
      rec(i + 1);
      stack.push_back(j);
    }
    if (static_cast<int>(stack.size()) < L - i) {  // open needs a later close
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
    if (tr.allow_dots) {
      part[i] = 0;
      rec(i + 1);
    }
  }
};

}  // namespace

MonoidTable enumerate(FamilyTag family, long n, long budget) {
  if (n < 1) fail(errc::bad_parameters, "enumerate needs n >= 1");
  Int predicted = monoid_size_formula(family, n);
  if (predicted > budget)
    fail(errc::budget_exceeded, "predicted cardinality " +
                                    predicted.get_str() + " exceeds budget " +
                                    std::to_string(budget));

  MonoidTable t;
  t.family = family;
  t.n = n;
  t.word = family_word(family, n);
  t.m = static_cast<int>(t.word.size());
  if (t.m > kMaxWord) fail(errc::budget_exceeded, "word too long to pack");

  Generator gen{family_traits(family), t.word, t.m, 2 * t.m,
                std::vector<int>(2 * t.m + 1, 0), {}, &t.elements};
  gen.rec(1);

  t.keys.reserve(t.elements.size());
  for (const Diagram& d : t.elements) t.keys.push_back(serialize(d));
  std::vector<int> order(t.elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.keys[a] < t.keys[b]; });
  std::vector<Diagram> elems;
  std::vector<std::string> keys;
  elems.reserve(order.size());
  keys.reserve(order.size());
  for (int id : order) {
    elems.push_back(std::move(t.elements[id]));
    keys.push_back(std::move(t.keys[id]));
  }
  t.elements = std::move(elems);
  t.keys = std::move(keys);

  long N = t.size();
  t.packed.resize(2L * t.m * N);
  for (long id = 0; id < N; ++id) {
    int8_t* r = t.packed.data() + 2L * t.m * id;
    const Diagram& d = t.elements[id];
    for (int i = 0; i < t.m; ++i) r[i] = static_cast<int8_t>(d.bpart[i]);
    for (int i = 0; i < t.m; ++i) r[t.m + i] = static_cast<int8_t>(d.tpart[i]);
  }
  uint64_t cap = 16;
  while (cap < 2 * static_cast<uint64_t>(N) + 1) cap <<= 1;
  t.slots.assign(cap, -1);
  t.slot_mask = cap - 1;
  for (long id = 0; id < N; ++id) {
    uint64_t h = fnv1a(t.rep(id), 2 * t.m) & t.slot_mask;
    while (t.slots[h] >= 0) h = (h + 1) & t.slot_mask;
    t.slots[h] = static_cast<int32_t>(id);
  }
  t.identity_id = t.id_of(identity(t.word));
  return t;
}

int compose_id(const MonoidTable& t, long f, long g) {
  const int m = t.m;
  const int8_t* fb = t.rep(f);
  const int8_t* ft = fb + m;
  const int8_t* gb = t.rep(g);
  const int8_t* gt = gb + m;
  int8_t out[2 * kMaxWord];
  std::fill(out, out + 2 * m, kUnset);
  int8_t* rb = out;
  int8_t* rt = out + m;

  auto trace = [&](int mid, bool up, int& kind) -> int {
    for (;;) {
      if (up) {
        int c = gb[mid - 1];
        if (c == 0) {
          kind = 0;
          return 0;
        }
        if (c > 0) {
          kind = 2;
          return c;
        }
        mid = -c;
        up = false;
      } else {
        int c = ft[mid - 1];
        if (c == 0) {
          kind = 0;
          return 0;
        }
        if (c > 0) {
          kind = 1;
          return c;
        }
        mid = -c;
        up = true;
      }
    }
  };

  for (int p = 1; p <= m; ++p) {
    if (rb[p - 1] != kUnset) continue;
    int code = fb[p - 1];
    if (code == 0) {
      rb[p - 1] = 0;
    } else if (code < 0) {
      rb[p - 1] = static_cast<int8_t>(code);
      rb[-code - 1] = static_cast<int8_t>(-p);
    } else {
      int kind;
      int pos = trace(code, true, kind);
      if (kind == 0)
        rb[p - 1] = 0;
      else if (kind == 2) {
        rb[p - 1] = static_cast<int8_t>(pos);
        rt[pos - 1] = static_cast<int8_t>(p);
      } else {
        rb[p - 1] = static_cast<int8_t>(-pos);
        rb[pos - 1] = static_cast<int8_t>(-p);
      }
    }
  }
  for (int q = 1; q <= m; ++q) {
    if (rt[q - 1] != kUnset) continue;
    int code = gt[q - 1];
    if (code == 0) {
      rt[q - 1] = 0;
    } else if (code < 0) {
      rt[q - 1] = static_cast<int8_t>(code);
      rt[-code - 1] = static_cast<int8_t>(-q);
    } else {
      int kind;
      int pos = trace(code, false, kind);
      if (kind == 0)
        rt[q - 1] = 0;
      else if (kind == 2) {
        rt[q - 1] = static_cast<int8_t>(-pos);
        rt[pos - 1] = static_cast<int8_t>(-q);
      } else {
        rt[q - 1] = static_cast<int8_t>(pos);
        rb[pos - 1] = static_cast<int8_t>(q);
      }
    }
  }
  return t.id_of_packed(out);
}

long export_elements(const MonoidTable& t, std::ostream& out) {
  out << "# family=" << family_name(t.family) << " n=" << t.n
      << " count=" << t.size() << "\n";
  for (const std::string& k : t.keys) out << k << "\n";
  if (!out) fail(errc::io_error, "element export failed");
  return t.size();
}

namespace {

struct HalfGenerator {
  const FamilyTraits& tr;
  const Word& word;
  const Word& alpha;
  int m;
  std::vector<int> kind;  // per position: 0 dot, >0 alpha slot, -j arc partner
  std::vector<int> stack;
  std::vector<Diagram>* out;
  Int count = 0;

  void emit() {
    ++count;
    if (!out) return;
    Diagram d;
    d.bottom = word;
    d.top = alpha;
    d.bpart.assign(m, 0);
    d.tpart.assign(alpha.size(), 0);
    for (int i = 1; i <= m; ++i) {
      int v = kind[i];
      if (v > 0) {
        d.bpart[i - 1] = v;
        d.tpart[v - 1] = i;
      } else if (v < 0) {
        d.bpart[i - 1] = v;
      }
    }
    out->push_back(std::move(d));
  }

  void rec(int i, int used) {
    int remaining = m - i + 1;
    int need = static_cast<int>(alpha.size()) - used;
    if (static_cast<int>(stack.size()) + need > remaining) return;
    if (i > m) {
      emit();
      return;
    }
    // close an open arc
    if (!stack.empty() && word[stack.back() - 1] == word[i - 1] + tr.arc_shift) {
      int j = stack.back();
      stack.pop_back();
      kind[i] = -j;
      kind[j] = -i;
      rec(i + 1, used);
      stack.push_back(j);
    }
    // open an arc
    if (tr.allow_arcs) {
      stack.push_back(i);
      rec(i + 1, used);
      stack.pop_back();
    }
    // through strands keep alpha order and may not sit under an open arc
    if (need > 0 && stack.empty() && word[i - 1] == alpha[used]) {
      kind[i] = used + 1;
      rec(i + 1, used + 1);
    }
    if (tr.allow_dots) {
      kind[i] = 0;
      rec(i + 1, used);
    }
  }
};

}  // namespace

std::vector<Diagram> enumerate_halves(const Word& word, const Word& alpha,
                                      FamilyTag family) {
  std::vector<Diagram> out;
  HalfGenerator gen{family_traits(family), word, alpha,
                    static_cast<int>(word.size()),
                    std::vector<int>(word.size() + 1, 0), {}, &out};
  gen.rec(1, 0);
  return out;
}

Int count_halves(const Word& word, const Word& alpha, FamilyTag family) {
  HalfGenerator gen{family_traits(family), word, alpha,
                    static_cast<int>(word.size()),
                    std::vector<int>(word.size() + 1, 0), {}, nullptr};
  gen.rec(1, 0);
  return gen.count;
}

Int monoid_size(FamilyTag family, long n, SizeMode mode) {
  if (mode == SizeMode::formula) return monoid_size_formula(family, n);
  MonoidTable t = enumerate(family, n);
  Int brute = t.size();
  if (mode == SizeMode::brute) return brute;
  Int form = monoid_size_formula(family, n);
  if (form != brute)
    fail(errc::formula_brute_mismatch,
         std::string(family_name(family)) + " n=" + std::to_string(n) +
             " formula " + form.get_str() + " != brute " + brute.get_str());
  return form;
}

}  // namespace pdm
