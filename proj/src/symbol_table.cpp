#include "fanforge/symbol_table.hpp"

#include "fanforge/error.hpp"

#include <cctype>
#include <set>

namespace fanforge {

namespace {

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char ch : name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

bool sqrt_inside(const Rational& q, const RationalInterval& iv) {
  const bool hi_ok = iv.hi >= 0 && iv.hi * iv.hi >= q;
  const bool lo_ok = iv.lo <= 0 || iv.lo * iv.lo <= q;
  return hi_ok && lo_ok;
}

void validate_symbol(const SymbolSpec& s) {
  const std::string who = "symbol '" + s.name + "': ";
  if (!is_identifier(s.name)) fail(ErrorCode::InvalidSymbolTable, who + "not an identifier");
  if (s.approx_radius <= 0) fail(ErrorCode::InvalidSymbolTable, who + "approximation radius must be positive");
  const RationalInterval iv{s.approx_mid - s.approx_radius, s.approx_mid + s.approx_radius};
  if (s.min_poly) {
    univariate::Coeffs p = *s.min_poly;
    univariate::trim(p);
    if (univariate::degree(p) < 2) fail(ErrorCode::InvalidSymbolTable, who + "minimal polynomial must have degree >= 2");
    if (p.back() != 1) fail(ErrorCode::InvalidSymbolTable, who + "minimal polynomial must be monic");
    if (!univariate::is_irreducible_over_q(p)) {
      fail(ErrorCode::InvalidSymbolTable, who + "minimal polynomial is reducible over Q");
    }
    if (univariate::count_real_roots(p, iv.lo, iv.hi) != 1) {
      fail(ErrorCode::InvalidSymbolTable, who + "approximation interval does not isolate exactly one real root");
    }
  }
  if (s.sqrt_of) {
    const Rational& q = *s.sqrt_of;
    if (q <= 0) fail(ErrorCode::InvalidSymbolTable, who + "sqrt-of-rational refiner needs a positive radicand");
    if (!sqrt_inside(q, iv)) fail(ErrorCode::InvalidSymbolTable, who + "approximation interval does not contain sqrt(" + q.get_str() + ")");
    if (s.min_poly) {
      univariate::Coeffs expected{-q, Rational(0), Rational(1)};
      univariate::Coeffs p = *s.min_poly;
      univariate::trim(p);
      if (p != expected) fail(ErrorCode::InvalidSymbolTable, who + "refiner disagrees with the minimal polynomial");
    }
  }
}

}  // namespace

SymbolTable::SymbolTable(std::vector<SymbolSpec> symbols, ScalarMode mode, unsigned sign_budget)
    : symbols_(std::move(symbols)), mode_(mode), sign_budget_(sign_budget) {
  levels_.resize(symbols_.size());
  powers_.resize(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    levels_[i].push_back({s.approx_mid - s.approx_radius, s.approx_mid + s.approx_radius});
    if (s.min_poly) univariate::trim(*symbols_[i].min_poly);
  }
}

std::shared_ptr<const SymbolTable> SymbolTable::create(std::vector<SymbolSpec> symbols, unsigned sign_budget) {
  std::set<std::string> names;
  std::size_t algebraic = 0;
  for (const auto& s : symbols) {
    if (!names.insert(s.name).second) fail(ErrorCode::InvalidSymbolTable, "duplicate symbol '" + s.name + "'");
    validate_symbol(s);
    if (s.min_poly) ++algebraic;
  }
  ScalarMode mode = ScalarMode::Rational;
  if (!symbols.empty()) {
    if (algebraic == symbols.size()) {
      mode = ScalarMode::Algebraic;
    } else if (algebraic == 0) {
      mode = ScalarMode::Transcendental;
    } else {
      fail(ErrorCode::InvalidSymbolTable, "mixing algebraic and transcendental symbols is not supported");
    }
  }
  return std::shared_ptr<const SymbolTable>(new SymbolTable(std::move(symbols), mode, sign_budget));
}

std::shared_ptr<const SymbolTable> SymbolTable::rational(unsigned sign_budget) { return create({}, sign_budget); }

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t SymbolTable::relation_degree(std::size_t i) const {
  const auto& p = symbols_.at(i).min_poly;
  return p ? static_cast<std::size_t>(univariate::degree(*p)) : 0;
}

univariate::Coeffs SymbolTable::reduced_power(std::size_t i, std::uint32_t e) const {
  const std::size_t k = relation_degree(i);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& cache = powers_[i];
  if (cache.empty()) {
    univariate::Coeffs one(k, Rational(0));
    one[0] = 1;
    cache.push_back(std::move(one));
  }
  const auto& p = *symbols_[i].min_poly;
  while (cache.size() <= e) {
    // Multiply the previous power by x and fold x^k back with the relation.
    const auto& prev = cache.back();
    univariate::Coeffs next(k, Rational(0));
    const Rational overflow = prev[k - 1];
    for (std::size_t j = k - 1; j > 0; --j) next[j] = prev[j - 1];
    for (std::size_t j = 0; j < k; ++j) next[j] -= overflow * p[j];
    cache.push_back(std::move(next));
  }
  return cache[e];
}

bool SymbolTable::refinable(std::size_t i) const {
  const auto& s = symbols_.at(i);
  return s.min_poly.has_value() || s.sqrt_of.has_value();
}

RationalInterval SymbolTable::enclosure(std::size_t i, unsigned level) const {
  if (!refinable(i)) level = 0;
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& chain = levels_[i];
  const auto& s = symbols_[i];
  while (chain.size() <= level) {
    const RationalInterval cur = chain.back();
    const Rational mid = cur.midpoint();
    bool upper_half = false;
    if (s.sqrt_of) {
      upper_half = mid < 0 || mid * mid < *s.sqrt_of;
    } else {
      const int at_lo = sgn(univariate::evaluate(*s.min_poly, cur.lo));
      const int at_mid = sgn(univariate::evaluate(*s.min_poly, mid));
      upper_half = at_mid == at_lo;
    }
    chain.push_back(upper_half ? RationalInterval{mid, cur.hi} : RationalInterval{cur.lo, mid});
  }
  return chain[level];
}

}  // namespace fanforge
