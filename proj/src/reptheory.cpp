#include "artinforge/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "artinforge/error.hpp"

namespace artinforge::rep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

mpz_class Partition::centralizer_order() const {
  mpz_class z = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const unsigned long mult = j - i;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts_[i]), mult);
    z *= f * power;
    i = j;
  }
  return z;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw Error(ErrorCode::Range, "partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t im : images_) {
    if (im >= images_.size() || seen[im])
      throw Error(ErrorCode::InvalidArgument, "images do not form a permutation");
    seen[im] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::canonical(const Partition& cycle_type) {
  std::vector<std::size_t> im(static_cast<std::size_t>(cycle_type.size()));
  std::size_t start = 0;
  for (int len : cycle_type.parts()) {
    for (int k = 0; k < len; ++k)
      im[start + k] = start + static_cast<std::size_t>((k + 1) % len);
    start += static_cast<std::size_t>(len);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = i;
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (from == 0 || to == 0 || from > n || to > n)
        throw Error(ErrorCode::Range, "cycle entry outside 1..n");
      im[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw Error(ErrorCode::Dimension, "permutations of different degree");
  std::vector<std::size_t> im(size());
  for (std::size_t i = 0; i < size(); ++i) im[i] = images_[other.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> im(size());
  for (std::size_t i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::extended(std::size_t n) const {
  if (n < size()) throw Error(ErrorCode::Dimension, "cannot shrink a permutation");
  std::vector<std::size_t> im = images_;
  for (std::size_t i = size(); i < n; ++i) im.push_back(i);
  return Permutation(std::move(im));
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::Range, "symmetric group degree must be at least 1");
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  check_n(n);
  std::vector<ConjugacyClass> out;
  const mpz_class order = factorial(n);
  for (Partition& p : partitions(n)) {
    mpz_class size = order / p.centralizer_order();
    Permutation rep = Permutation::canonical(p);
    out.push_back({std::move(p), std::move(size), std::move(rep)});
  }
  return out;
}

ClassFunction::ClassFunction(int n) : n_(n), classes_(partitions(n)), values_(classes_.size()) {
  check_n(n);
}

ClassFunction::ClassFunction(int n, std::vector<Rational> values) : ClassFunction(n) {
  if (values.size() != classes_.size())
    throw Error(ErrorCode::Dimension, "one value per conjugacy class expected");
  values_ = std::move(values);
}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction f(n);
  for (Rational& v : f.values_) v = 1;
  return f;
}

std::size_t ClassFunction::index_of(const Partition& lambda) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), lambda);
  if (it == classes_.end() || !(*it == lambda))
    throw Error(ErrorCode::InvalidArgument, "not a partition of " + std::to_string(n_));
  return static_cast<std::size_t>(it - classes_.begin());
}

const Rational& ClassFunction::at(const Partition& lambda) const { return values_[index_of(lambda)]; }
Rational& ClassFunction::at(const Partition& lambda) { return values_[index_of(lambda)]; }

void ClassFunction::check_same_n(const ClassFunction& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::Dimension, "class functions of different degree");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  check_same_n(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  check_same_n(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
  for (Rational& v : values_) v *= c;
  return *this;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw Error(ErrorCode::Dimension, "class functions of different degree");
  Rational total = 0;
  const mpz_class order = factorial(f.n());
  for (std::size_t i = 0; i < f.classes().size(); ++i) {
    mpz_class size = order / f.classes()[i].centralizer_order();
    total += Rational(size) * f.values()[i] * g.values()[i];
  }
  return total / Rational(order);
}

ClassFunction GradedClassFunction::at_one() const {
  ClassFunction sum(n);
  for (const ClassFunction& c : coefficients) sum += c;
  return sum;
}

std::vector<Rational> GradedClassFunction::on_class(const Partition& lambda) const {
  std::vector<Rational> out;
  for (const ClassFunction& c : coefficients) out.push_back(c.at(lambda));
  return out;
}

ClassFunction subset_character(int n, int k) {
  check_n(n);
  if (k < 0 || k > n) throw Error(ErrorCode::Range, "subset size outside 0..n");
  ClassFunction f(n);
  for (const Partition& lambda : f.classes()) {
    // Invariant k-subsets are unions of cycles: count sub-multisets of the
    // cycle lengths summing to k.
    std::vector<mpz_class> ways(static_cast<std::size_t>(k) + 1);
    ways[0] = 1;
    for (int len : lambda.parts())
      for (int s = k; s >= len; --s) ways[s] += ways[s - len];
    f.at(lambda) = Rational(ways[k]);
  }
  return f;
}

ClassFunction powerset_character(int n) {
  ClassFunction f(n);
  for (const Partition& lambda : f.classes()) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, lambda.length());
    f.at(lambda) = Rational(v);
  }
  return f;
}

ClassFunction half_powerset_character(int n) {
  check_n(n);
  if (n % 2 == 0)
    throw Error(ErrorCode::Parity, "half of the powerset character is defined for odd n only");
  ClassFunction f(n);
  for (const Partition& lambda : f.classes()) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, lambda.length() - 1);
    f.at(lambda) = Rational(v);
  }
  return f;
}

ClassFunction xn_character(int n) {
  if (n < 2) throw Error(ErrorCode::Range, "point-set character needs n >= 2");
  ClassFunction f(n);
  for (const Partition& lambda : f.classes()) {
    const std::size_t cycles = lambda.length();
    // Sign of Π ε_j when cycle c carries sign s_c: Π s_c^{len_c}.
    std::uint64_t even = 0, odd = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cycles); ++mask) {
      int sign = 1;
      for (std::size_t c = 0; c < cycles; ++c)
        if (((mask >> c) & 1u) && (lambda.parts()[c] % 2 == 1)) sign = -sign;
      (sign > 0 ? even : odd) += 1;
    }
    std::uint64_t total = 1;
    for (int k = 0; k <= n - 3; ++k) total += (k % 2 == 0) ? even : odd;
    f.at(lambda) = Rational(static_cast<unsigned long>(total));
  }
  return f;
}

namespace {

nlohmann::json class_function_json(const ClassFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < f.classes().size(); ++i) {
    values.push_back({{"cycle_type", f.classes()[i].parts()}, {"value", f.values()[i].get_str()}});
  }
  return {{"n", f.n()}, {"values", values}};
}

}  // namespace

std::string to_json(const ClassFunction& f) { return class_function_json(f).dump(); }

std::string to_json(const GradedClassFunction& f) {
  nlohmann::json series = nlohmann::json::array();
  for (std::size_t d = 0; d < f.coefficients.size(); ++d) {
    nlohmann::json entry = class_function_json(f.coefficients[d]);
    series.push_back({{"degree", d}, {"values", entry["values"]}});
  }
  return nlohmann::json{{"n", f.n}, {"series", series}}.dump();
}

std::string to_text(const ClassFunction& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.classes().size(); ++i) {
    if (i) out << '\n';
    out << f.classes()[i].to_string() << ' ' << f.values()[i].get_str();
  }
  return out.str();
}

std::string to_text(const GradedClassFunction& f) {
  std::ostringstream out;
  if (f.n < 1) return "";
  const std::vector<Partition> classes = partitions(f.n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out << '\n';
    out << classes[i].to_string();
    for (const ClassFunction& c : f.coefficients) out << ' ' << c.values()[i].get_str();
  }
  return out.str();
}

}  // namespace artinforge::rep
