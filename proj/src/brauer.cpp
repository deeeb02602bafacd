#include "cybmw/brauer.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <tuple>

namespace cybmw {

int theta_index(int r, long label) {
  long m = label % r;
  if (m < 0) m += r;
  return static_cast<int>(std::min(m, static_cast<long>(r) - m));
}

int theta_count(int r) { return r / 2 + 1; }

void ZrBrauerDiagram::set_strand(int from, int to, long label) {
  long m = label % r_;
  if (m < 0) m += r_;
  mate_[static_cast<size_t>(from)] = to;
  mate_[static_cast<size_t>(to)] = from;
  lab_[static_cast<size_t>(from)] = static_cast<int>(m);
  lab_[static_cast<size_t>(to)] = static_cast<int>(m == 0 ? 0 : r_ - m);
}

ZrBrauerDiagram::ZrBrauerDiagram(int n, int r, const std::vector<std::pair<int, int>>& pairs,
                                 const std::vector<long>& labels) {
  if (n < 0 || r < 1)
    throw Error(Code::InvalidArgument, "diagram needs n >= 0 strands and modulus r >= 1");
  if (pairs.size() != static_cast<size_t>(n) || labels.size() != pairs.size())
    throw Error(Code::InvalidMatching,
                "expected " + std::to_string(n) + " strands with one label each");
  n_ = n;
  r_ = r;
  mate_.assign(static_cast<size_t>(2 * n), -1);
  lab_.assign(static_cast<size_t>(2 * n), 0);
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [from, to] = pairs[i];
    if (from < 0 || from >= 2 * n || to < 0 || to >= 2 * n || from == to)
      throw Error(Code::InvalidMatching, "strand endpoint out of range");
    if (mate_[static_cast<size_t>(from)] != -1 || mate_[static_cast<size_t>(to)] != -1)
      throw Error(Code::InvalidMatching, "endpoint used twice");
    set_strand(from, to, labels[i]);
  }
}

ZrBrauerDiagram ZrBrauerDiagram::identity(int n, int r) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labels(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
  return ZrBrauerDiagram(n, r, pairs, labels);
}

ZrBrauerDiagram ZrBrauerDiagram::e_diagram(int n, int r, int i) {
  if (i < 1 || i >= n)
    throw Error(Code::IndexOutOfRange, "cap position must satisfy 1 <= i <= n-1");
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labels;
  for (int j = 0; j < n; ++j) {
    if (j == i - 1) {
      pairs.emplace_back(j, j + 1);          // top cap
      pairs.emplace_back(n + j, n + j + 1);  // bottom cup
      labels.push_back(0);
      labels.push_back(0);
    } else if (j != i) {
      pairs.emplace_back(j, n + j);
      labels.push_back(0);
    }
  }
  return ZrBrauerDiagram(n, r, pairs, labels);
}

ZrBrauerDiagram ZrBrauerDiagram::permutation_diagram(int r, const std::vector<int>& pi,
                                                     const std::vector<long>& labels) {
  const int n = static_cast<int>(pi.size());
  if (labels.size() != pi.size())
    throw Error(Code::InvalidArgument, "need one label per strand");
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labs;
  for (int j = 0; j < n; ++j) {
    if (pi[static_cast<size_t>(j)] < 0 || pi[static_cast<size_t>(j)] >= n)
      throw Error(Code::InvalidMatching, "permutation image out of range");
    pairs.emplace_back(j, n + pi[static_cast<size_t>(j)]);
    labs.push_back(labels[static_cast<size_t>(pi[static_cast<size_t>(j)])]);
  }
  return ZrBrauerDiagram(n, r, pairs, labs);
}

std::vector<std::tuple<int, int, int>> ZrBrauerDiagram::strands() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int e = 0; e < 2 * n_; ++e)
    if (e < mate(e)) out.emplace_back(e, mate(e), label_from(e));
  return out;
}

bool ZrBrauerDiagram::operator<(const ZrBrauerDiagram& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (r_ != o.r_) return r_ < o.r_;
  if (mate_ != o.mate_) return mate_ < o.mate_;
  return lab_ < o.lab_;
}

std::string ZrBrauerDiagram::str() const {
  std::ostringstream os;
  auto endpoint = [&](int e) {
    return (e < n_ ? "t" : "b") + std::to_string(e < n_ ? e + 1 : e - n_ + 1);
  };
  os << "{";
  bool first = true;
  for (auto [from, to, label] : strands()) {
    if (!first) os << " ";
    first = false;
    os << endpoint(from) << ">" << endpoint(to) << "[" << label << "]";
  }
  os << "}";
  return os.str();
}

std::pair<std::vector<int>, ZrBrauerDiagram> compose_diagrams(const ZrBrauerDiagram& a,
                                                              const ZrBrauerDiagram& b) {
  if (a.n_ != b.n_ || a.r_ != b.r_)
    throw Error(Code::SizeMismatch, "can only compose diagrams of equal n and r");
  const int n = a.n_;
  const int r = a.r_;

  ZrBrauerDiagram out;
  out.n_ = n;
  out.r_ = r;
  out.mate_.assign(static_cast<size_t>(2 * n), -1);
  out.lab_.assign(static_cast<size_t>(2 * n), 0);
  std::vector<int> loops(static_cast<size_t>(theta_count(r)), 0);

  // b is stacked over a: the product's top row is b's top row, its bottom row
  // is a's bottom row, and b's bottom meets a's top.  Walk each open strand
  // from a product boundary endpoint, hopping across the interface and
  // summing labels along the walk direction.
  std::vector<char> seen_a(static_cast<size_t>(2 * n), 0);
  std::vector<char> seen_b(static_cast<size_t>(2 * n), 0);

  auto walk = [&](bool in_b, int e, int start_product_endpoint) {
    long acc = 0;
    for (;;) {
      (in_b ? seen_b : seen_a)[static_cast<size_t>(e)] = 1;
      const ZrBrauerDiagram& d = in_b ? b : a;
      int f = d.mate(e);
      acc += d.label_from(e);
      (in_b ? seen_b : seen_a)[static_cast<size_t>(f)] = 1;
      if (in_b) {
        if (f < n) {  // product top endpoint
          out.set_strand(start_product_endpoint, f, acc);
          return;
        }
        in_b = false;
        e = f - n;  // b's bottom f meets a's top
      } else {
        if (f >= n) {  // product bottom endpoint (same numbering as a's)
          out.set_strand(start_product_endpoint, f, acc);
          return;
        }
        in_b = true;
        e = f + n;  // a's top f meets b's bottom
      }
    }
  };

  for (int i = 0; i < n; ++i)
    if (!seen_b[static_cast<size_t>(i)]) walk(true, i, i);
  for (int i = 0; i < n; ++i)
    if (!seen_a[static_cast<size_t>(n + i)]) walk(false, n + i, n + i);

  // Remaining interface nodes belong to closed loops, which alternate between
  // top-top strands of a and bottom-bottom strands of b.
  for (int k = 0; k < n; ++k) {
    if (seen_a[static_cast<size_t>(k)]) continue;
    long acc = 0;
    int cur = k;
    do {
      int f = a.mate(cur);
      if (f >= n) throw Error(Code::Internal, "loop walk left the interface");
      acc += a.label_from(cur);
      seen_a[static_cast<size_t>(cur)] = seen_a[static_cast<size_t>(f)] = 1;
      int g = b.mate(n + f);
      if (g < n) throw Error(Code::Internal, "loop walk left the interface");
      acc += b.label_from(n + f);
      seen_b[static_cast<size_t>(n + f)] = seen_b[static_cast<size_t>(g)] = 1;
      cur = g - n;
    } while (cur != k);
    ++loops[static_cast<size_t>(theta_index(r, acc))];
  }

  return {std::move(loops), std::move(out)};
}

ZrBrauerDiagram include_strand(const ZrBrauerDiagram& d) {
  const int n = d.n_;
  ZrBrauerDiagram out;
  out.n_ = n + 1;
  out.r_ = d.r_;
  out.mate_.assign(static_cast<size_t>(2 * n + 2), -1);
  out.lab_.assign(static_cast<size_t>(2 * n + 2), 0);
  auto remap = [&](int e) { return e < n ? e : e + 1; };
  for (auto [from, to, label] : d.strands()) out.set_strand(remap(from), remap(to), label);
  out.set_strand(n, 2 * n + 1, 0);  // new vertical strand on the right
  return out;
}

std::pair<int, ZrBrauerDiagram> close_rightmost(const ZrBrauerDiagram& d) {
  const int n = d.n_;
  if (n < 1) throw Error(Code::InvalidArgument, "closure needs at least one strand");
  const int top = n - 1, bot = 2 * n - 1;
  ZrBrauerDiagram out;
  out.n_ = n - 1;
  out.r_ = d.r_;
  out.mate_.assign(static_cast<size_t>(2 * n - 2), -1);
  out.lab_.assign(static_cast<size_t>(2 * n - 2), 0);
  auto remap = [&](int e) { return e < n ? e : e - 1; };

  int loop_idx = -1;
  for (auto [from, to, label] : d.strands()) {
    if (from == top && to == bot) {
      // The new label-0 strand closes this strand into a loop.
      loop_idx = theta_index(d.r_, label);
    } else if (to != top && to != bot && from != top && from != bot) {
      out.set_strand(remap(from), remap(to), label);
    }
  }
  if (loop_idx < 0) {
    // Concatenate partner(top) -> top -> bot -> partner(bot) through the new
    // label-0 strand.
    int p = d.mate(top), q = d.mate(bot);
    long acc = static_cast<long>(d.label_from(p)) + d.label_from(bot);
    out.set_strand(remap(p), remap(q), acc);
  }
  return {loop_idx, std::move(out)};
}

ZrBrauerDiagram flip(const ZrBrauerDiagram& d) {
  const int n = d.n_;
  ZrBrauerDiagram out;
  out.n_ = n;
  out.r_ = d.r_;
  out.mate_.assign(static_cast<size_t>(2 * n), -1);
  out.lab_.assign(static_cast<size_t>(2 * n), 0);
  auto reflect = [&](int e) { return e < n ? e + n : e - n; };
  // Reflection carries each strand's orientation along, so the label rides
  // unchanged; set_strand re-normalizes against the new smaller endpoint.
  for (auto [from, to, label] : d.strands()) out.set_strand(reflect(from), reflect(to), label);
  return out;
}

std::vector<ZrBrauerDiagram> enumerate_diagrams(int n, int r) {
  if (n < 0 || r < 1)
    throw Error(Code::InvalidArgument, "diagram enumeration needs n >= 0, r >= 1");
  std::vector<ZrBrauerDiagram> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<long> labels(static_cast<size_t>(n), 0);
  std::vector<char> used(static_cast<size_t>(2 * n), 0);

  auto emit_labels = [&](auto&& self, size_t strand) -> void {
    if (strand == pairs.size()) {
      out.emplace_back(ZrBrauerDiagram(n, r, pairs, labels));
      return;
    }
    for (long l = 0; l < r; ++l) {
      labels[strand] = l;
      self(self, strand + 1);
    }
  };
  auto match = [&](auto&& self) -> void {
    int from = -1;
    for (int e = 0; e < 2 * n; ++e)
      if (!used[static_cast<size_t>(e)]) {
        from = e;
        break;
      }
    if (from < 0) {
      emit_labels(emit_labels, 0);
      return;
    }
    used[static_cast<size_t>(from)] = 1;
    for (int to = from + 1; to < 2 * n; ++to) {
      if (used[static_cast<size_t>(to)]) continue;
      used[static_cast<size_t>(to)] = 1;
      pairs.emplace_back(from, to);
      self(self);
      pairs.pop_back();
      used[static_cast<size_t>(to)] = 0;
    }
    used[static_cast<size_t>(from)] = 0;
  };
  match(match);
  return out;
}

struct DiagramTable::Impl {
  std::mutex mu;
  std::map<ZrBrauerDiagram, uint32_t> ids;
  std::deque<ZrBrauerDiagram> all;
};

DiagramTable& DiagramTable::instance() {
  static DiagramTable table;
  return table;
}

DiagramTable::Impl& DiagramTable::impl() const {
  static Impl impl;
  return impl;
}

uint32_t DiagramTable::intern(const ZrBrauerDiagram& d) {
  Impl& im = impl();
  std::lock_guard<std::mutex> lock(im.mu);
  auto it = im.ids.find(d);
  if (it != im.ids.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(im.all.size());
  im.all.push_back(d);
  im.ids.emplace(d, id);
  return id;
}

const ZrBrauerDiagram& DiagramTable::at(uint32_t id) const {
  Impl& im = impl();
  std::lock_guard<std::mutex> lock(im.mu);
  if (id >= im.all.size()) throw Error(Code::IndexOutOfRange, "unknown diagram id");
  return im.all[id];  // deque references are stable under push_back
}

RatFunc symbolic_theta(int r, int j) {
  if (j < 0 || j >= theta_count(r))
    throw Error(Code::IndexOutOfRange, "loop parameter index out of range");
  return RatFunc(LaurentPoly::variable(theta_vars(r), j), LaurentPoly::integer(Int(1)));
}

std::vector<RatFunc> symbolic_thetas(int r) {
  std::vector<RatFunc> out;
  for (int j = 0; j < theta_count(r); ++j) out.push_back(symbolic_theta(r, j));
  return out;
}

}  // namespace cybmw
