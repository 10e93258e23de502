#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ncop {

// A finite ordinal: distinct opaque labels listed in increasing order.
class Ordinal {
 public:
  Ordinal() = default;
  explicit Ordinal(std::vector<std::string> labels);
  static Ordinal canonical(int n);  // (1,...,n)

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& operator[](int k) const { return labels_[k]; }
  int position(const std::string& label) const;  // -1 when absent
  bool contains(const std::string& label) const { return position(label) >= 0; }
  bool operator==(const Ordinal& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
};

struct GapPair {
  std::string lo, hi;
  bool operator==(const GapPair& o) const { return lo == o.lo && hi == o.hi; }
  bool operator<(const GapPair& o) const { return std::tie(lo, hi) < std::tie(o.lo, o.hi); }
};

std::vector<GapPair> gap_set(const Ordinal& I);

// J spliced into I in place of the label i.
Ordinal ordinal_insert(const Ordinal& I, const std::string& i, const Ordinal& J);

struct GapBijection {
  // Images of Gap(I) and Gap(J) inside Gap(I ⊔_i J), in the order of gap_set.
  std::vector<std::pair<GapPair, GapPair>> from_outer, from_inner;
  GapPair image_outer(const GapPair& g) const;
  GapPair image_inner(const GapPair& g) const;
  // Inverse: returns {is_inner, preimage}.
  std::pair<bool, GapPair> preimage(const GapPair& g) const;
};

GapBijection gap_bijection(const Ordinal& I, const std::string& i, const Ordinal& J);

}  // namespace ncop
