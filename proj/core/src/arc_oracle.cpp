#include "motivic/arc_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <thread>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

using gf::Field;

void validate_monomial(const MonomialFunction& f) {
  if (f.d < 1) throw InvalidInput("ambient dimension must be >= 1");
  if (f.exps.empty()) throw InvalidInput("monomial needs at least one variable");
  if (static_cast<long>(f.exps.size()) > f.d)
    throw InvalidInput("monomial uses more variables than the ambient dimension");
  for (long a : f.exps) {
    if (a < 1) throw InvalidInput("exponents must be >= 1");
  }
}

/// Truncated product c = a * b mod t^W.
void trunc_mul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* c, long w,
               const Field& field) {
  const std::uint8_t* add = field.add_table();
  const std::uint8_t* mul = field.mul_table();
  const int q = field.q();
  for (long j = 0; j < w; ++j) {
    std::uint8_t acc = 0;
    for (long u = 0; u <= j; ++u) acc = add[acc * q + mul[a[u] * q + b[j - u]]];
    c[j] = acc;
  }
}

bool all_zero(const std::uint8_t* a, long w) {
  for (long j = 0; j < w; ++j)
    if (a[j] != 0) return false;
  return true;
}

}  // namespace

Integer arc_space_size(const ArcCountTask& t) {
  validate_monomial(t.f);
  if (t.n < 0) throw InvalidInput("jet order must be >= 0");
  return int_pow(t.q, static_cast<unsigned long>(t.f.d * (t.n + 1)));
}

Integer enumerate_arcs(const ArcCountTask& t, int threads) {
  validate_monomial(t.f);
  if (t.n < 0) throw InvalidInput("jet order must be >= 0");
  if (!Field::supported(t.q))
    throw InvalidInput("unsupported field size " + std::to_string(t.q));
  if (arc_space_size(t) > Integer(1000000000))
    throw BudgetExceeded("jet space larger than 10^9");
  const long w = t.n + 1;
  const Integer jets = int_pow(t.q, static_cast<unsigned long>(w));
  if (jets > Integer(1l << 22))
    throw BudgetExceeded("per-coordinate jet table too large");
  const long jet_count = jets.convert_to<long>();
  const long k = static_cast<long>(t.f.exps.size());
  const Field field(t.q);
  const std::uint8_t* add = field.add_table();
  const std::uint8_t* mul = field.mul_table();
  const int q = t.q;

  // Power table per distinct exponent: jet index -> coefficients of jet^a.
  std::map<long, std::vector<std::uint8_t>> by_exp;
  {
    std::vector<std::uint8_t> jet(w), tmp(w);
    for (long a : t.f.exps) {
      if (by_exp.count(a)) continue;
      auto& table = by_exp[a];
      table.resize(static_cast<size_t>(jet_count) * w);
      for (long idx = 0; idx < jet_count; ++idx) {
        long x = idx;
        for (long j = 0; j < w; ++j) {
          jet[j] = static_cast<std::uint8_t>(x % q);
          x /= q;
        }
        std::uint8_t* out = table.data() + static_cast<size_t>(idx) * w;
        std::copy(jet.begin(), jet.end(), out);
        for (long rep = 1; rep < a; ++rep) {
          trunc_mul(out, jet.data(), tmp.data(), w, field);
          std::copy(tmp.begin(), tmp.end(), out);
        }
      }
    }
  }
  std::vector<const std::uint8_t*> power(k);
  for (long i = 0; i < k; ++i) power[i] = by_exp.at(t.f.exps[i]).data();

  const bool monic = t.mode == ArcMode::Monic;
  const long n = t.n;

  // Counts tuples with first-coordinate jet index in [lo, hi).
  auto count_range = [&](long lo, long hi) -> std::uint64_t {
    std::uint64_t matched = 0;
    static const std::uint8_t one_jet[1] = {1};
    std::vector<std::vector<std::uint8_t>> buffers(k > 1 ? k - 1 : 0,
                                                   std::vector<std::uint8_t>(w));
    // prod = product of the power jets of coordinates 0..level-1 (the
    // constant 1 when level == 0, where only prod[0] is meaningful).
    auto recurse = [&](auto&& self, long level, const std::uint8_t* prod,
                       long prod_len) -> void {
      const long from = level == 0 ? lo : 0;
      const long to = level == 0 ? hi : jet_count;
      if (level == k - 1) {
        // Final coordinate: convolve and test, bailing at the first nonzero
        // coefficient below t^n.
        for (long idx = from; idx < to; ++idx) {
          const std::uint8_t* b = power[level] + static_cast<size_t>(idx) * w;
          bool okay = true;
          for (long j = 0; j < n && okay; ++j) {
            std::uint8_t acc = 0;
            const long top = std::min(j, prod_len - 1);
            for (long u = 0; u <= top; ++u)
              acc = add[acc * q + mul[prod[u] * q + b[j - u]]];
            if (acc != 0) okay = false;
          }
          if (!okay) continue;
          std::uint8_t lead = 0;
          const long top = std::min(n, prod_len - 1);
          for (long u = 0; u <= top; ++u)
            lead = add[lead * q + mul[prod[u] * q + b[n - u]]];
          if (monic ? lead == 1 : lead != 0) ++matched;
        }
        return;
      }
      for (long idx = from; idx < to; ++idx) {
        const std::uint8_t* p = power[level] + static_cast<size_t>(idx) * w;
        const std::uint8_t* next = p;
        if (level > 0) {
          trunc_mul(prod, p, buffers[level - 1].data(), w, field);
          next = buffers[level - 1].data();
        }
        if (all_zero(next, w)) continue;  // dead branch: product stays zero
        self(self, level + 1, next, w);
      }
    };
    recurse(recurse, 0, one_jet, 1);
    return matched;
  };

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  nthreads = static_cast<int>(std::min<long>(nthreads, jet_count));
  std::uint64_t total = 0;
  if (nthreads == 1) {
    total = count_range(0, jet_count);
  } else {
    std::vector<std::uint64_t> partial(nthreads, 0);
    std::vector<std::thread> pool;
    for (int c = 0; c < nthreads; ++c) {
      const long lo = jet_count * c / nthreads;
      const long hi = jet_count * (c + 1) / nthreads;
      pool.emplace_back([&, c, lo, hi] { partial[c] = count_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (int c = 0; c < nthreads; ++c) total += partial[c];
  }
  const unsigned long free_coords = static_cast<unsigned long>((t.f.d - k) * w);
  return Integer(total) * int_pow(t.q, free_coords);
}

ResolutionData induced_resolution(const MonomialFunction& f) {
  validate_monomial(f);
  std::vector<ResolutionComponent> comps;
  for (size_t i = 0; i < f.exps.size(); ++i) {
    comps.push_back({"E" + std::to_string(i + 1), f.exps[i], 1});
  }
  return ResolutionData(f.d, std::move(comps));
}

CountOracle strata_oracle(const MonomialFunction& f, int q) {
  validate_monomial(f);
  if (!Field::supported(q))
    throw InvalidInput("unsupported field size " + std::to_string(q));
  if (int_pow(q, static_cast<unsigned long>(f.d + 1)) > Integer(10000000))
    throw BudgetExceeded("stratum enumeration larger than 10^7");
  const long k = static_cast<long>(f.exps.size());
  const Field field(q);
  auto data = std::make_shared<ResolutionData>(induced_resolution(f));
  const unsigned nmasks = 1u << k;

  // Plain strata, classified by the zero support of x in F_q^k.
  std::vector<Integer> open_naive(nmasks, 0);
  {
    std::vector<std::uint8_t> x(k, 0);
    for (;;) {
      unsigned mask = 0;
      for (long i = 0; i < k; ++i)
        if (x[i] == 0) mask |= 1u << i;
      open_naive[mask] += 1;
      long i = 0;
      while (i < k && x[i] == q - 1) x[i++] = 0;
      if (i == k) break;
      ++x[i];
    }
  }

  // Cover strata: points (z, x) with x supported off I and
  // z^{m_I} prod_{j not in I} x_j^{m_j} = 1.
  std::vector<Integer> open_equiv(nmasks, 0);
  for (unsigned mask = 1; mask < nmasks; ++mask) {
    const long m_i = data->basis().m_I(mask);
    std::vector<long> outside;
    for (long i = 0; i < k; ++i)
      if (!(mask & (1u << i))) outside.push_back(i);
    std::vector<std::uint8_t> x(outside.size(), 1);
    for (;;) {
      std::uint8_t prod = 1;
      for (size_t j = 0; j < outside.size(); ++j)
        prod = field.mul(prod, field.pow(x[j], f.exps[outside[j]]));
      for (int z = 0; z < q; ++z) {
        if (field.mul(field.pow(static_cast<std::uint8_t>(z), m_i), prod) == 1)
          open_equiv[mask] += 1;
      }
      size_t j = 0;
      while (j < outside.size() && x[j] == q - 1) x[j++] = 1;
      if (j == outside.size()) break;
      ++x[j];
    }
  }

  const Integer ambient_factor =
      int_pow(q, static_cast<unsigned long>(f.d - k));
  return [data, open_naive = std::move(open_naive),
          open_equiv = std::move(open_equiv),
          ambient_factor](const StratumSymbol& g) -> std::optional<Integer> {
    if (g.same_key(unit_symbol())) return Integer(1);
    const auto info = data->basis().classify(g);
    if (!info) return std::nullopt;
    const auto& opens = info->equivariant ? open_equiv : open_naive;
    Integer total = 0;
    if (info->open) {
      total = opens[info->mask];
    } else {
      const unsigned full = data->basis().full_mask();
      const unsigned rest = full & ~info->mask;
      unsigned sub = rest;
      for (;;) {
        total += opens[info->mask | sub];
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    }
    return total * ambient_factor;
  };
}

std::vector<CompareRow> compare_zeta(const MonomialFunction& f,
                                     const std::vector<int>& qs, long n_max) {
  validate_monomial(f);
  const ResolutionData data = induced_resolution(f);
  const TRational plain = naive_zeta(data);
  const TRational equiv = equivariant_zeta(data);
  std::vector<CompareRow> out;
  for (int q : qs) {
    const CountOracle oracle = strata_oracle(f, q);
    for (const ArcMode mode : {ArcMode::Ord, ArcMode::Monic}) {
      const TRational& zeta = mode == ArcMode::Ord ? plain : equiv;
      for (long n = mode == ArcMode::Ord ? 0 : 1; n <= n_max; ++n) {
        CompareRow row;
        row.q = q;
        row.n = n;
        row.mode = mode;
        try {
          row.arcs = enumerate_arcs({q, n, mode, f});
        } catch (const BudgetExceeded&) {
          row.skipped = true;
          out.push_back(row);
          continue;
        }
        const GrothClass coeff =
            zeta.series_coefficient(n).scaled(LaurentPoly::L(n * f.d));
        row.series = specialize_count(coeff, q, oracle);
        out.push_back(row);
      }
    }
  }
  return out;
}

namespace {

using Poly = std::vector<std::uint8_t>;  // ascending coefficients, no lead zero

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const Field& field) {
  const std::uint8_t lead_inv = field.inverse(b.back());
  while (a.size() >= b.size()) {
    const std::uint8_t c = field.mul(a.back(), lead_inv);
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = field.add(a[shift + i], field.neg(field.mul(c, b[i])));
    }
    strip(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, const Field& field) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, field);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

TwistResult unit_twist_experiment(int q, const std::array<long, 4>& cubic) {
  if (!Field::supported(q))
    throw InvalidInput("unsupported field size " + std::to_string(q));
  if (q % 2 == 0) throw InvalidInput("the double cover needs odd q");
  const Field field(q);
  Poly g;
  for (long c : cubic) g.push_back(field.embed(c));
  strip(g);
  if (g.size() < 2) throw InvalidInput("the cubic degenerates to a constant");
  Poly dg;
  for (size_t i = 1; i < g.size(); ++i)
    dg.push_back(field.mul(field.embed(static_cast<long>(i)), g[i]));
  strip(dg);
  const Poly common = poly_gcd(g, dg, field);
  if (common.size() != 1)
    throw InvalidInput("the cubic is not squarefree over this field");

  auto eval = [&](std::uint8_t x) {
    std::uint8_t v = 0;
    for (size_t i = g.size(); i-- > 0;) v = field.add(field.mul(v, x), g[i]);
    return v;
  };
  TwistResult result;
  result.q = q;
  long units = 0;
  for (int x = 0; x < q; ++x) {
    const std::uint8_t gx = eval(static_cast<std::uint8_t>(x));
    if (gx == 0) continue;
    ++units;
    for (int s = 0; s < q; ++s) {
      if (field.mul(static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(s)) == gx)
        result.twisted += 1;
    }
  }
  if (units == 0) throw InvalidInput("the cubic vanishes everywhere");
  result.straight = 2 * Integer(units);
  return result;
}

}  // namespace motivic
