#include "jackhyp/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "jackhyp/scalar.hpp"

namespace jackhyp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = 0;
  for (int p : parts_) weight_ += p;
}

std::vector<int> Partition::padded(int r) const {
  if (r < length()) throw DomainError("partition longer than requested rank");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(r), 0);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(at(0)), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

int Partition::leg(int i, int j) const {
  int l = 0;
  for (int k = i + 1; k < length() && parts_[static_cast<std::size_t>(k)] > j; ++k) ++l;
  return l;
}

bool Partition::dominates(const Partition& other) const {
  int n = std::max(length(), other.length());
  long s1 = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    s1 += at(i);
    s2 += other.at(i);
    if (s1 < s2) return false;
  }
  return true;
}

Partition Partition::doubled() const {
  std::vector<int> out;
  out.reserve(parts_.size() * 2);
  for (int p : parts_) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

Partition Partition::scaled(int k) const {
  if (k < 0) throw DomainError("negative partition scale");
  std::vector<int> out(parts_);
  for (int& p : out) p *= k;
  return Partition(std::move(out));
}

Partition Partition::shifted(int c, int r) const {
  if (c < 0) throw DomainError("negative partition shift");
  std::vector<int> out = padded(r);
  for (int& p : out) p += c;
  return Partition(std::move(out));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&](bool final_tok) {
    std::string t;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    tok.clear();
    if (t.empty()) {
      if (final_tok && parts.empty()) return;
      throw ParseError("empty entry in partition '" + std::string(text) + "'");
    }
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad partition entry '" + t + "' in '" + std::string(text) + "'");
    parts.push_back(std::stoi(t));
  };
  for (char c : text) {
    if (c == ',')
      flush(false);
    else
      tok += c;
  }
  flush(true);
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // the remaining slots must be able to absorb what is left
    if (static_cast<long>(p) * slots < remaining) break;
    cur.push_back(p);
    enumerate_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight, int max_len) {
  if (weight < 0 || max_len < 0) throw DomainError("enumerate_partitions: negative argument");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(weight, weight, max_len, cur, out);
  return out;
}

long long orbit_size(const Partition& p, int r) {
  std::vector<int> v = p.padded(r);
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  long long num = 1;
  // multinomial r! / prod(mult!) computed incrementally to stay exact
  int placed = 0;
  for (auto [val, m] : mult) {
    for (int k = 1; k <= m; ++k) {
      ++placed;
      num = num * placed / k;
    }
  }
  return num;
}

}  // namespace jackhyp
