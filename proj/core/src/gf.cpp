#include "motivic/gf.hpp"

#include <array>
#include <optional>
#include <string>

#include "motivic/errors.hpp"

namespace motivic::gf {

namespace {

struct FieldShape {
  int q, p, e;
  // Modulus polynomial coefficients, ascending, for the extension fields.
  std::array<int, 4> mod;
};

std::optional<FieldShape> shape_of(int q) {
  switch (q) {
    case 2: return FieldShape{2, 2, 1, {}};
    case 3: return FieldShape{3, 3, 1, {}};
    case 4: return FieldShape{4, 2, 2, {1, 1, 1, 0}};     // x^2 + x + 1
    case 5: return FieldShape{5, 5, 1, {}};
    case 7: return FieldShape{7, 7, 1, {}};
    case 8: return FieldShape{8, 2, 3, {1, 1, 0, 1}};     // x^3 + x + 1
    case 9: return FieldShape{9, 3, 2, {1, 0, 1, 0}};     // x^2 + 1
    default: return std::nullopt;
  }
}

std::vector<int> digits(int x, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int x = 0;
  for (size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

bool Field::supported(int q) { return shape_of(q).has_value(); }

Field::Field(int q) : q_(q) {
  const auto shape = shape_of(q);
  if (!shape) throw InvalidInput("unsupported field size " + std::to_string(q));
  p_ = shape->p;
  const int e = shape->e;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, e);
    std::vector<int> na(e);
    for (int i = 0; i < e; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(na, p_));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, e);
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<std::uint8_t>(encode(s, p_));
      // Polynomial product reduced by the modulus.
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int i = 2 * e - 2; i >= e; --i) {
        if (prod[i] == 0) continue;
        // x^i = x^{i-e} * x^e = -x^{i-e} * (mod - x^e)
        const int c = prod[i];
        prod[i] = 0;
        for (int j = 0; j < e; ++j) {
          prod[i - e + j] = (prod[i - e + j] + c * (p_ - shape->mod[j])) % p_;
        }
      }
      std::vector<int> m(prod.begin(), prod.begin() + e);
      mul_[a * q + b] = static_cast<std::uint8_t>(encode(m, p_));
    }
  }
}

std::uint8_t Field::pow(std::uint8_t a, long e) const {
  if (e < 0) throw InvalidInput("negative exponent");
  std::uint8_t r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint8_t Field::inverse(std::uint8_t a) const {
  if (a == 0) throw InvalidInput("zero has no inverse");
  return pow(a, q_ - 2);
}

std::uint8_t Field::embed(long c) const {
  long r = c % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint8_t>(r);
}

}  // namespace motivic::gf
