#include "pseudoquant/symcore/chart.hpp"

#include <cctype>
#include <set>

#include "pseudoquant/symcore/scalar.hpp"

namespace pq {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Chart::Chart(std::vector<std::string> alpha, std::vector<std::string> beta, std::string orientation)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), orientation_(std::move(orientation)) {
  if (alpha_.empty()) throw DomainError("chart needs at least one degree of freedom");
  if (alpha_.size() != beta_.size()) throw DomainError("chart needs as many alpha as beta labels");
  std::set<std::string> seen;
  for (const auto* names : {&alpha_, &beta_}) {
    for (const auto& s : *names) {
      if (!valid_identifier(s)) throw DomainError("invalid coordinate label '" + s + "'");
      if (s == kHbarName || s == "i") throw DomainError("coordinate label '" + s + "' is reserved");
      if (!seen.insert(s).second) throw DomainError("duplicate coordinate label '" + s + "'");
    }
  }
}

const std::string& Chart::name(int coord) const {
  if (coord < 0 || coord >= dim()) throw DomainError("coordinate index out of range");
  return coord < n() ? alpha_[coord] : beta_[coord - n()];
}

std::optional<int> Chart::find(std::string_view name) const {
  for (int c = 0; c < dim(); ++c) {
    if (this->name(c) == name) return c;
  }
  return std::nullopt;
}

ChartPtr make_chart(std::vector<std::string> alpha, std::vector<std::string> beta) {
  return std::make_shared<const Chart>(std::move(alpha), std::move(beta));
}

ChartPtr canonical_chart(int n, const std::string& momentum, const std::string& position) {
  std::vector<std::string> a, b;
  for (int i = 1; i <= n; ++i) {
    a.push_back(momentum + std::to_string(i));
    b.push_back(position + std::to_string(i));
  }
  return make_chart(std::move(a), std::move(b));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!same_chart(a, b)) throw ChartMismatch();
}

}  // namespace pq
