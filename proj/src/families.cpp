#include "tribospin/families.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include <json.hpp>

namespace tribospin {

namespace {

FamilyDescriptor concrete(std::string name, std::string display, std::string group, long a, long b,
                          long c, long r, long s, long t, std::vector<std::string> aliases = {}) {
  return {std::move(name),
          std::move(display),
          std::move(group),
          {Rational(a), Rational(b), Rational(c), Rational(r), Rational(s), Rational(t)},
          false,
          std::move(aliases)};
}

FamilyDescriptor generic(std::string name, std::string display, long r, long s, long t,
                         std::vector<std::string> aliases = {}) {
  FamilyDescriptor d{std::move(name),
                     std::move(display),
                     "",
                     {Rational(0), Rational(0), Rational(0), Rational(r), Rational(s), Rational(t)},
                     true,
                     std::move(aliases)};
  d.group = d.name;
  return d;
}

std::vector<FamilyDescriptor> build_registry() {
  std::vector<FamilyDescriptor> reg;
  reg.reserve(47);

  const std::string g_trib = "generalized-tribonacci";
  const std::string g_pad = "generalized-padovan";
  const std::string g_pp = "generalized-pell-padovan";
  const std::string g_top = "generalized-third-order-pell";
  const std::string g_toj = "generalized-third-order-jacobsthal";
  const std::string g_jp = "generalized-jacobsthal-padovan";
  const std::string g_nar = "generalized-narayana";
  const std::string g_3p = "generalized-3-primes";
  const std::string g_r3p = "generalized-reverse-3-primes";

  // (r,s,t) = (1,1,1)
  reg.push_back(concrete("tribonacci", "Tribonacci", g_trib, 0, 1, 1, 1, 1, 1));
  reg.push_back(concrete("tribonacci-lucas", "Tribonacci-Lucas", g_trib, 3, 1, 3, 1, 1, 1));
  reg.push_back(concrete("tribonacci-perrin", "Tribonacci-Perrin", g_trib, 3, 0, 2, 1, 1, 1));
  reg.push_back(concrete("modified-tribonacci", "Modified Tribonacci", g_trib, 1, 1, 1, 1, 1, 1));
  reg.push_back(
      concrete("modified-tribonacci-lucas", "Modified Tribonacci-Lucas", g_trib, 4, 4, 10, 1, 1, 1));
  reg.push_back(
      concrete("adjusted-tribonacci-lucas", "Adjusted Tribonacci-Lucas", g_trib, 4, 2, 0, 1, 1, 1));

  // (r,s,t) = (0,1,1)
  reg.push_back(concrete("padovan", "Padovan (Cordonnier)", g_pad, 1, 1, 1, 0, 1, 1,
                         {"cordonnier"}));
  reg.push_back(concrete("perrin", "Perrin (Padovan-Lucas)", g_pad, 3, 0, 2, 0, 1, 1,
                         {"padovan-lucas"}));
  reg.push_back(concrete("van-der-laan", "Van der Laan", g_pad, 1, 0, 1, 0, 1, 1));
  reg.push_back(concrete("padovan-perrin", "Padovan-Perrin", g_pad, 0, 0, 1, 0, 1, 1));
  reg.push_back(concrete("modified-padovan", "Modified Padovan", g_pad, 3, 1, 3, 0, 1, 1));
  reg.push_back(concrete("adjusted-padovan", "Adjusted Padovan", g_pad, 0, 1, 0, 0, 1, 1));

  // (r,s,t) = (0,2,1)
  reg.push_back(concrete("pell-padovan", "Pell-Padovan", g_pp, 1, 1, 1, 0, 2, 1));
  reg.push_back(concrete("pell-perrin", "Pell-Perrin", g_pp, 3, 0, 2, 0, 2, 1));
  reg.push_back(concrete("third-order-fibonacci-pell", "Third-order Fibonacci-Pell", g_pp, 1, 0, 2,
                         0, 2, 1));
  reg.push_back(
      concrete("third-order-lucas-pell", "Third-order Lucas-Pell", g_pp, 3, 0, 4, 0, 2, 1));
  reg.push_back(
      concrete("adjusted-pell-padovan", "Adjusted Pell-Padovan", g_pp, 0, 1, 0, 0, 2, 1));

  // (r,s,t) = (2,1,1)
  reg.push_back(concrete("third-order-pell", "Third-order Pell", g_top, 0, 1, 2, 2, 1, 1));
  reg.push_back(
      concrete("third-order-pell-lucas", "Third-order Pell-Lucas", g_top, 3, 2, 6, 2, 1, 1));
  reg.push_back(concrete("third-order-modified-pell", "Third-order modified Pell", g_top, 0, 1, 1,
                         2, 1, 1));
  reg.push_back(
      concrete("third-order-pell-perrin", "Third-order Pell-Perrin", g_top, 3, 0, 2, 2, 1, 1));

  // (r,s,t) = (1,1,2)
  reg.push_back(
      concrete("third-order-jacobsthal", "Third-order Jacobsthal", g_toj, 0, 1, 1, 1, 1, 2));
  reg.push_back(concrete("third-order-jacobsthal-lucas", "Third-order Jacobsthal-Lucas", g_toj, 2,
                         1, 5, 1, 1, 2));
  reg.push_back(concrete("modified-third-order-jacobsthal", "Modified third-order Jacobsthal",
                         g_toj, 3, 1, 3, 1, 1, 2));
  reg.push_back(concrete("third-order-jacobsthal-perrin", "Third-order Jacobsthal-Perrin", g_toj,
                         3, 0, 2, 1, 1, 2));

  // (r,s,t) = (0,1,2)
  reg.push_back(concrete("jacobsthal-padovan", "Jacobsthal-Padovan", g_jp, 1, 1, 1, 0, 1, 2));
  reg.push_back(concrete("jacobsthal-perrin", "Jacobsthal-Perrin", g_jp, 3, 0, 2, 0, 1, 2));
  reg.push_back(concrete("adjusted-jacobsthal-padovan", "Adjusted Jacobsthal-Padovan", g_jp, 0, 1,
                         0, 0, 1, 2));
  reg.push_back(concrete("modified-jacobsthal-padovan", "Modified Jacobsthal-Padovan", g_jp, 3, 1,
                         3, 0, 1, 2));

  // (r,s,t) = (1,0,1)
  reg.push_back(concrete("narayana", "Narayana", g_nar, 0, 1, 1, 1, 0, 1));
  reg.push_back(concrete("narayana-lucas", "Narayana-Lucas", g_nar, 3, 1, 1, 1, 0, 1));
  reg.push_back(concrete("narayana-perrin", "Narayana-Perrin", g_nar, 3, 0, 2, 1, 0, 1));

  // (r,s,t) = (2,3,5)
  reg.push_back(concrete("3-primes", "3-primes", g_3p, 0, 1, 2, 2, 3, 5));
  reg.push_back(concrete("lucas-3-primes", "Lucas 3-primes", g_3p, 3, 2, 10, 2, 3, 5));
  reg.push_back(concrete("modified-3-primes", "Modified 3-primes", g_3p, 0, 1, 1, 2, 3, 5));

  // (r,s,t) = (5,3,2)
  reg.push_back(concrete("reverse-3-primes", "Reverse 3-primes", g_r3p, 0, 1, 5, 5, 3, 2));
  reg.push_back(
      concrete("reverse-lucas-3-primes", "Reverse Lucas 3-primes", g_r3p, 3, 5, 31, 5, 3, 2));
  reg.push_back(
      concrete("reverse-modified-3-primes", "Reverse modified 3-primes", g_r3p, 0, 1, 4, 5, 3, 2));

  // Classification rows: recurrence fixed, initial values free.
  reg.push_back(generic(g_trib, "Generalized Tribonacci", 1, 1, 1));
  reg.push_back(generic(g_pad, "Generalized Padovan", 0, 1, 1));
  reg.push_back(generic(g_pp, "Generalized Pell-Padovan", 0, 2, 1));
  reg.push_back(generic(g_top, "Generalized third-order Pell", 2, 1, 1));
  reg.push_back(generic(g_toj, "Generalized third-order Jacobsthal", 1, 1, 2));
  reg.push_back(generic(g_jp, "Generalized Jacobsthal-Padovan", 0, 1, 2));
  reg.push_back(generic(g_nar, "Generalized Narayana", 1, 0, 1));
  reg.push_back(generic(g_3p, "Generalized 3-primes", 2, 3, 5));
  reg.push_back(generic(g_r3p, "Generalized reverse 3-primes", 5, 3, 2));

  return reg;
}

std::string fold_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char ch : raw) {
    unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u)) {
      out.push_back(static_cast<char>(std::tolower(u)));
    } else if (ch == '-' || ch == '_' || ch == ' ' || ch == '.' || ch == '(' || ch == ')') {
      // separators and decorations fold away entirely
    } else {
      out.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  return out;
}

std::size_t edit_distance(const std::string& x, const std::string& y) {
  std::vector<std::size_t> row(y.size() + 1);
  for (std::size_t k = 0; k <= y.size(); ++k) row[k] = k;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t k = 1; k <= y.size(); ++k) {
      std::size_t up = row[k];
      row[k] = std::min({row[k] + 1, row[k - 1] + 1, diag + (x[i - 1] == y[k - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[y.size()];
}

}  // namespace

const std::vector<FamilyDescriptor>& family_registry() {
  static const std::vector<FamilyDescriptor> reg = build_registry();
  return reg;
}

std::vector<const FamilyDescriptor*> concrete_families() {
  std::vector<const FamilyDescriptor*> out;
  for (const auto& f : family_registry())
    if (!f.generic) out.push_back(&f);
  return out;
}

const FamilyDescriptor& family_lookup(std::string_view name) {
  const std::string key = fold_name(name);
  for (const auto& f : family_registry()) {
    if (fold_name(f.name) == key || fold_name(f.display) == key) return f;
    for (const auto& alias : f.aliases)
      if (fold_name(alias) == key) return f;
  }

  std::vector<std::pair<std::size_t, const FamilyDescriptor*>> ranked;
  for (const auto& f : family_registry()) ranked.emplace_back(edit_distance(key, fold_name(f.name)), &f);
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::string msg = "unknown family '" + std::string(name) + "'; nearest:";
  for (std::size_t i = 0; i < ranked.size() && i < 3; ++i)
    msg += " '" + ranked[i].second->name + "'";
  throw NotFoundError(msg);
}

const std::string& family_registry_json() {
  static const std::string doc = [] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : family_registry()) {
      nlohmann::json row;
      row["name"] = f.name;
      row["display"] = f.display;
      row["group"] = f.group;
      row["a"] = f.generic ? "V0" : f.params.a.str();
      row["b"] = f.generic ? "V1" : f.params.b.str();
      row["c"] = f.generic ? "V2" : f.params.c.str();
      row["r"] = f.params.r.str();
      row["s"] = f.params.s.str();
      row["t"] = f.params.t.str();
      row["generic"] = f.generic;
      arr.push_back(std::move(row));
    }
    return arr.dump();
  }();
  return doc;
}

}  // namespace tribospin
