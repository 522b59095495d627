#include "rearr/bounds.hpp"

#include <stdexcept>

namespace rearr {

namespace {

void require_open_unit(const Rational& v, const char* name) {
  if (v <= 0 || v >= 1) {
    throw std::invalid_argument(std::string(name) + " must lie strictly between 0 and 1, got " +
                                to_string(v));
  }
}

Rational pow2(std::uint64_t n) {
  BigInt p = 1;
  p <<= static_cast<unsigned>(n);
  return Rational(p);
}

}  // namespace

bool doubling_condition(const Rational& kappa, const Rational& eps, std::uint64_t n) {
  Rational lhs = (1 + Rational(n) * kappa * kappa) * kappa / 2;
  return lhs >= pow2(n + 1) * eps;
}

std::uint64_t n_of_eps(const Rational& kappa, const Rational& eps) {
  require_open_unit(kappa, "kappa");
  require_open_unit(eps, "eps");
  std::uint64_t n = 0;
  if (!doubling_condition(kappa, eps, 0)) {
    return 0;
  }
  while (doubling_condition(kappa, eps, n + 1)) {
    ++n;
  }
  return n;
}

Rational lemma_lower_bound(const Rational& kappa, const Rational& eps) {
  return kappa * kappa * kappa / 4 * n_of_eps(kappa, eps);
}

std::vector<ChainValue> induction_chain(const Rational& kappa, const Rational& eps,
                                        const Rational& s, std::uint64_t n_max) {
  require_open_unit(kappa, "kappa");
  if (eps <= 0) {
    throw std::invalid_argument("eps must be positive");
  }
  if (s <= 0 || s > kappa) {
    throw std::invalid_argument("s must lie in (0, kappa]");
  }
  std::vector<ChainValue> chain;
  chain.reserve(n_max + 1);
  const Rational k2 = kappa * kappa;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    chain.push_back({n, (1 + Rational(n) * k2) * s - pow2(n) * eps});
  }
  return chain;
}

BoundCertificate make_certificate(const Rational& kappa, const Rational& eps) {
  BoundCertificate cert;
  cert.kappa = kappa;
  cert.eps = eps;
  cert.n_eps = n_of_eps(kappa, eps);
  cert.bound = kappa * kappa * kappa / 4 * cert.n_eps;
  cert.degenerate = cert.n_eps == 0;
  cert.chain = induction_chain(kappa, eps, kappa / 2, cert.n_eps);
  return cert;
}

VCheckReport check_V_inequalities(const VTable& table, const Rational& kappa,
                                  const Rational& eps) {
  if (table.cost.empty() || table.n_cells == 0) {
    throw std::invalid_argument("empty V table");
  }
  VCheckReport report;
  const Rational eps_cells = eps * table.n_cells;
  const Rational k2 = kappa * kappa;

  auto value_at = [&](std::size_t s) -> std::optional<Rational> {
    if (s == 0) {
      return Rational(0);
    }
    auto it = table.cost.find(s);
    if (it == table.cost.end()) {
      return std::nullopt;
    }
    return it->second;
  };

  for (const auto& [s, v] : table.cost) {
    const Rational floor = Rational(s) - eps_cells;
    if (v < floor) {
      report.holds_floor = false;
      report.witnesses.push_back({VInequality::Floor, s, std::nullopt, v, floor});
    }

    if (Rational(s) <= eps_cells) {
      continue;
    }
    std::optional<Rational> best;
    std::optional<std::size_t> best_sigma;
    for (std::size_t sigma = 1; sigma < s; ++sigma) {
      auto rest = value_at(s - sigma);
      auto part = value_at(sigma);
      if (!rest || !part) {
        continue;
      }
      Rational candidate = *rest + *part + k2 * s + (1 - k2) * sigma;
      if (!best || candidate < *best) {
        best = candidate;
        best_sigma = sigma;
      }
    }
    if (best && v < *best) {
      report.holds_splitting = false;
      report.witnesses.push_back({VInequality::Splitting, s, best_sigma, v, *best});
    }
  }
  return report;
}

}  // namespace rearr
