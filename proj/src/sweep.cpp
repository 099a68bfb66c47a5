#include "ggrad/sweep.hpp"

#include <algorithm>

namespace ggrad {

namespace {

// non-increasing tuples of the given length over a descending value list
void non_increasing(const std::vector<Rat>& values, int length,
                    std::vector<Rat>& cur, size_t from,
                    std::vector<Weight>& out) {
  if (length == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < values.size(); ++i) {
    cur.push_back(values[i]);
    non_increasing(values, length - 1, cur, i, out);
    cur.pop_back();
  }
}

std::vector<Rat> descending_values(int max_coord, bool half, bool with_zero,
                                   bool negatives) {
  std::vector<Rat> vals;
  if (half) {
    for (Rat v = Rat(2 * max_coord - 1, 2); v.sgn() > 0; v -= Rat(1))
      vals.push_back(v);
    if (negatives) {
      std::vector<Rat> neg = vals;
      std::reverse(neg.begin(), neg.end());
      for (const Rat& v : neg) vals.push_back(-v);
    }
  } else {
    for (int v = max_coord; v >= 1; --v) vals.push_back(Rat(v));
    if (with_zero) vals.push_back(Rat(0));
    if (negatives)
      for (int v = -1; v >= -max_coord; --v) vals.push_back(Rat(v));
  }
  return vals;
}

void append_tuples(std::vector<Weight>& out, const std::vector<Rat>& values,
                   int length) {
  std::vector<Rat> cur;
  non_increasing(values, length, cur, 0, out);
}

}  // namespace

std::vector<DominantWeight> dominant_sweep(const GroupId& id, int max_coord,
                                           bool half_integral) {
  const GroupDescriptor& g = descriptor(id);
  const int m = g.rank;
  std::vector<Weight> raw;
  switch (id.family) {
    case Family::SO:
    case Family::Spin: {
      const bool odd = g.n % 2 != 0;
      std::vector<std::vector<Rat>> value_sets;
      value_sets.push_back(descending_values(max_coord, false, true, false));
      if (g.half_integral_ok && half_integral && max_coord >= 1)
        value_sets.push_back(descending_values(max_coord, true, false, false));
      for (const auto& values : value_sets) {
        std::vector<Weight> tuples;
        append_tuples(tuples, values, m);
        for (Weight& w : tuples) {
          raw.push_back(w);
          if (!odd && !w[m - 1].is_zero()) {
            Weight flipped = w;
            flipped[m - 1] = -flipped[m - 1];
            raw.push_back(std::move(flipped));
          }
        }
      }
      break;
    }
    case Family::U:
      append_tuples(raw, descending_values(max_coord, false, true, true), m);
      break;
    case Family::SU: {
      std::vector<Weight> heads;
      append_tuples(heads, descending_values(max_coord, false, true, false),
                    m - 1);
      for (Weight& h : heads) {
        h.push_back(Rat(0));
        raw.push_back(std::move(h));
      }
      break;
    }
    case Family::Sp:
    case Family::G2:
      append_tuples(raw, descending_values(max_coord, false, true, false), m);
      break;
    case Family::Sp1Sp: {
      std::vector<Weight> tails;
      append_tuples(tails, descending_values(max_coord, false, true, false),
                    m - 1);
      for (int beta = 0; beta <= max_coord; ++beta)
        for (const Weight& t : tails) {
          Weight w;
          w.reserve(m);
          w.push_back(Rat(beta));
          w.insert(w.end(), t.begin(), t.end());
          raw.push_back(std::move(w));
        }
      break;
    }
    case Family::Spin7: {
      append_tuples(raw, descending_values(max_coord, false, true, false), m);
      if (half_integral && max_coord >= 1)
        append_tuples(raw, descending_values(max_coord, true, false, false), m);
      break;
    }
  }
  std::sort(raw.begin(), raw.end(), WeightLexLess{});
  std::vector<DominantWeight> out;
  out.reserve(raw.size());
  for (const Weight& w : raw)
    if (is_dominant(id, w)) out.push_back(certify(id, w));
  return out;
}

std::vector<GroupId> standard_groups(int max_n, int max_m) {
  std::vector<GroupId> out;
  for (int n = 3; n <= max_n; ++n) out.push_back({Family::SO, n});
  for (int n = 3; n <= max_n; ++n) out.push_back({Family::Spin, n});
  for (int m = 1; m <= max_m; ++m) out.push_back({Family::U, m});
  for (int m = 2; m <= max_m; ++m) out.push_back({Family::SU, m});
  for (int m = 1; m <= max_m; ++m) out.push_back({Family::Sp, m});
  for (int m = 1; m <= max_m; ++m) out.push_back({Family::Sp1Sp, m});
  out.push_back({Family::G2, 0});
  out.push_back({Family::Spin7, 0});
  return out;
}

}  // namespace ggrad
