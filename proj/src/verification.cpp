#include "tribospin/verification.hpp"

#include <algorithm>

#include "tribospin/families.hpp"
#include "tribospin/spinor.hpp"

namespace tribospin {

const char* to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Pass:
      return "PASS";
    case IdentityStatus::Discrepant:
      return "DISCREPANT";
    case IdentityStatus::Error:
      return "ERROR";
  }
  return "?";
}

IdentityStatus expected_status(Expectation e, const SequenceParams& p) {
  switch (e) {
    case Expectation::Always:
      return IdentityStatus::Pass;
    case Expectation::PadovanRecurrenceOnly:
      return (p.r == Rational(0) && p.s == Rational(1) && p.t == Rational(1))
                 ? IdentityStatus::Pass
                 : IdentityStatus::Discrepant;
    case Expectation::Never:
      return IdentityStatus::Discrepant;
  }
  return IdentityStatus::Error;
}

namespace {

struct Ctx {
  const std::vector<Rational>& v;  // V(0 .. n_max+6)
  long n;

  Rational V(long k) const { return v[static_cast<std::size_t>(n + k)]; }
  HSpinor phi() const { return spinor_from_window(V(0), V(1), V(2), V(3)); }
  HSpinor bar() const { return conjugate(phi(), ConjugationKind::OrdinaryBar); }
  HSpinor star() const { return conjugate(phi(), ConjugationKind::QuaternionicStar); }
  HSpinor tilde() const { return conjugate(phi(), ConjugationKind::HyperbolicTilde); }
  HSpinor check() const { return conjugate(phi(), ConjugationKind::MateCheck); }
};

HSpinor sp(Rational c1re, Rational c1j, Rational c2re, Rational c2j) {
  return {{std::move(c1re), std::move(c1j)}, {std::move(c2re), std::move(c2j)}};
}

using SpinorFn = HSpinor (*)(const Ctx&);

struct IdentitySpec {
  const char* theorem;
  int index;
  const char* statement;
  int min_n;
  Expectation expected;
  SpinorFn lhs;
  SpinorFn printed;
  SpinorFn derived;
  const char* derived_text;
};

// Printed right sides are the paper's displays; derived right sides are the
// componentwise expansions of the left side from the conjugation operators.
const IdentitySpec kIdentities[] = {
    // Operator relations between the conjugations.
    {"th-2", 1, "bar(phi) = C check(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.bar(); },
     [](const Ctx& c) { return apply_c_matrix(c.check()); },
     [](const Ctx& c) { return apply_c_matrix(c.check()); }, "C check(phi)"},
    {"th-2", 2, "check(phi) = -j tilde(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.check(); },
     [](const Ctx& c) { return -times_j(c.tilde()); },
     [](const Ctx& c) { return -times_j(c.tilde()); }, "-j tilde(phi)"},
    {"th-2", 3, "bar(phi) = -j C tilde(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.bar(); },
     [](const Ctx& c) { return -times_j(apply_c_matrix(c.tilde())); },
     [](const Ctx& c) { return -times_j(apply_c_matrix(c.tilde())); }, "-j C tilde(phi)"},

    {"th-3", 1, "phi + star(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.phi() + c.star(); },
     [](const Ctx& c) { return sp(2 * c.V(0), 0, 0, 0); },
     [](const Ctx& c) { return sp(2 * c.V(0), 0, 0, 0); }, "[2V(n) ; 0]"},
    {"th-3", 2, "phi - star(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.phi() - c.star(); },
     [](const Ctx& c) { return sp(0, 2 * c.V(3), -2 * c.V(1), 2 * c.V(2)); },
     [](const Ctx& c) { return sp(0, 2 * c.V(3), -2 * c.V(1), 2 * c.V(2)); },
     "[2V(n+3) j ; -2V(n+1)+2V(n+2) j]"},
    {"th-3", 3, "phi + bar(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.phi() + c.bar(); },
     [](const Ctx& c) { return sp(2 * c.V(0), 0, -2 * c.V(1), 0); },
     [](const Ctx& c) { return sp(2 * c.V(0), 0, -2 * c.V(1), 0); },
     "[2V(n) ; -2V(n+1)]"},
    {"th-3", 4, "phi - bar(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.phi() - c.bar(); },
     [](const Ctx& c) { return sp(0, 2 * c.V(3), 0, 2 * c.V(2)); },
     [](const Ctx& c) { return sp(0, 2 * c.V(3), 0, 2 * c.V(2)); },
     "[2V(n+3) j ; 2V(n+2) j]"},

    {"th-5-1", 1, "phi + tilde(phi)", 1, Expectation::PadovanRecurrenceOnly,
     [](const Ctx& c) { return c.phi() + c.tilde(); },
     [](const Ctx& c) { return sp(-c.V(-1), c.V(0), c.V(0), c.V(-1)); },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(2), c.V(3) - c.V(1), c.V(3) - c.V(1), c.V(2) - c.V(0));
     },
     "[V(n)-V(n+2)+(V(n+3)-V(n+1)) j ; V(n+3)-V(n+1)+(V(n+2)-V(n)) j]"},
    {"th-5-1", 2, "phi + tilde(phi) (second display; right side expands phi - tilde(phi))", 0,
     Expectation::Never, [](const Ctx& c) { return c.phi() + c.tilde(); },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(2), c.V(3) + c.V(1), -(c.V(1) + c.V(3)), c.V(2) + c.V(0));
     },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(2), c.V(3) - c.V(1), c.V(3) - c.V(1), c.V(2) - c.V(0));
     },
     "[V(n)-V(n+2)+(V(n+3)-V(n+1)) j ; V(n+3)-V(n+1)+(V(n+2)-V(n)) j]"},
    {"th-5-1", 3, "phi + check(phi)", 0, Expectation::PadovanRecurrenceOnly,
     [](const Ctx& c) { return c.phi() + c.check(); },
     [](const Ctx& c) { return sp(c.V(3), c.V(5), c.V(0) - c.V(1), c.V(2) - c.V(3)); },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(1), c.V(3) + c.V(2), c.V(0) - c.V(1), c.V(2) - c.V(3));
     },
     "[V(n)+V(n+1)+(V(n+3)+V(n+2)) j ; V(n)-V(n+1)+(V(n+2)-V(n+3)) j]"},
    {"th-5-1", 4, "phi - check(phi)", 0, Expectation::PadovanRecurrenceOnly,
     [](const Ctx& c) { return c.phi() - c.check(); },
     [](const Ctx& c) { return sp(c.V(0) - c.V(1), c.V(3) - c.V(2), -c.V(3), c.V(5)); },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(1), c.V(3) - c.V(2), -(c.V(0) + c.V(1)), c.V(2) + c.V(3));
     },
     "[V(n)-V(n+1)+(V(n+3)-V(n+2)) j ; -V(n)-V(n+1)+(V(n+2)+V(n+3)) j]"},

    {"th-6", 1, "star(phi) + bar(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.star() + c.bar(); },
     [](const Ctx& c) { return sp(2 * c.V(0), -2 * c.V(3), 0, 2 * c.V(2)); },
     [](const Ctx& c) { return sp(2 * c.V(0), -2 * c.V(3), 0, -2 * c.V(2)); },
     "[2V(n)-2V(n+3) j ; -2V(n+2) j]"},
    {"th-6", 2, "star(phi) - bar(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.star() - c.bar(); },
     [](const Ctx& c) { return sp(0, 0, 2 * c.V(1), 0); },
     [](const Ctx& c) { return sp(0, 0, 2 * c.V(1), 0); }, "[0 ; 2V(n+1)]"},

    {"th-6-1", 1, "star(phi) + tilde(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.star() + c.tilde(); },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(2), -(c.V(3) + c.V(1)), c.V(1) + c.V(3), -(c.V(2) + c.V(0)));
     },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(2), -(c.V(3) + c.V(1)), c.V(1) + c.V(3), -(c.V(2) + c.V(0)));
     },
     "[V(n)-V(n+2)-(V(n+3)+V(n+1)) j ; V(n+1)+V(n+3)-(V(n+2)+V(n)) j]"},
    {"th-6-1", 2, "star(phi) - tilde(phi)", 0, Expectation::Always,
     [](const Ctx& c) { return c.star() - c.tilde(); },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(2), c.V(1) - c.V(3), c.V(1) - c.V(3), c.V(0) - c.V(2));
     },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(2), c.V(1) - c.V(3), c.V(1) - c.V(3), c.V(0) - c.V(2));
     },
     "[V(n)+V(n+2)-(V(n+3)-V(n+1)) j ; V(n+1)-V(n+3)-(V(n+2)-V(n)) j]"},
    {"th-6-1", 3, "star(phi) + check(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.star() + c.check(); },
     [](const Ctx& c) { return sp(c.V(3), c.V(5), c.V(3), -c.V(5)); },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(1), c.V(2) - c.V(3), c.V(0) + c.V(1), -(c.V(2) + c.V(3)));
     },
     "[V(n)+V(n+1)+(V(n+2)-V(n+3)) j ; V(n)+V(n+1)-(V(n+2)+V(n+3)) j]"},
    {"th-6-1", 4, "star(phi) - check(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.star() - c.check(); },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(1), -(c.V(3) + c.V(2)), c.V(1) - c.V(0), c.V(2) - c.V(3));
     },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(1), -(c.V(3) + c.V(2)), c.V(1) - c.V(0), c.V(3) - c.V(2));
     },
     "[V(n)-V(n+1)-(V(n+3)+V(n+2)) j ; V(n+1)-V(n)+(V(n+3)-V(n+2)) j]"},

    {"th-8-1", 1, "bar(phi) + tilde(phi)", 1, Expectation::Never,
     [](const Ctx& c) { return c.bar() + c.tilde(); },
     [](const Ctx& c) {
       return sp(-c.V(-1), -(c.V(3) + c.V(1)), -c.V(0), -(c.V(2) + c.V(0)));
     },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(2), -(c.V(3) + c.V(1)), c.V(3) - c.V(1), -(c.V(2) + c.V(0)));
     },
     "[V(n)-V(n+2)-(V(n+3)+V(n+1)) j ; V(n+3)-V(n+1)-(V(n+2)+V(n)) j]"},
    {"th-8-1", 2, "bar(phi) - tilde(phi)", 1, Expectation::PadovanRecurrenceOnly,
     [](const Ctx& c) { return c.bar() - c.tilde(); },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(2), -c.V(0), -(c.V(1) + c.V(3)), -c.V(-1));
     },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(2), c.V(1) - c.V(3), -(c.V(1) + c.V(3)), c.V(0) - c.V(2));
     },
     "[V(n)+V(n+2)+(V(n+1)-V(n+3)) j ; -V(n+1)-V(n+3)+(V(n)-V(n+2)) j]"},
    {"th-8-1", 3, "tilde(phi) + check(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.tilde() + c.check(); },
     [](const Ctx& c) {
       return sp(c.V(1) - c.V(2), c.V(2) - c.V(1), c.V(3) + c.V(0), -c.V(1));
     },
     [](const Ctx& c) {
       return sp(c.V(1) - c.V(2), c.V(2) - c.V(1), c.V(3) + c.V(0), -(c.V(0) + c.V(3)));
     },
     "[V(n+1)-V(n+2)+(V(n+2)-V(n+1)) j ; V(n+3)+V(n)-(V(n)+V(n+3)) j]"},
    {"th-8-1", 4, "tilde(phi) - check(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.tilde() - c.check(); },
     [](const Ctx& c) { return sp(-c.V(4), -c.V(4), c.V(1), -c.V(1)); },
     [](const Ctx& c) {
       return sp(-(c.V(1) + c.V(2)), -(c.V(1) + c.V(2)), c.V(3) - c.V(0), c.V(3) - c.V(0));
     },
     "[-(V(n+1)+V(n+2))(1+j) ; (V(n+3)-V(n))(1+j)]"},
    {"th-8-1", 5, "bar(phi) - check(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.bar() - c.check(); },
     [](const Ctx& c) { return sp(-c.V(4), -c.V(4), c.V(1), -c.V(1)); },
     [](const Ctx& c) {
       return sp(c.V(0) - c.V(1), -(c.V(3) + c.V(2)), -(c.V(0) + c.V(1)), c.V(3) - c.V(2));
     },
     "[V(n)-V(n+1)-(V(n+3)+V(n+2)) j ; -V(n)-V(n+1)+(V(n+3)-V(n+2)) j]"},
    {"th-8-1", 6, "bar(phi) + check(phi)", 0, Expectation::Never,
     [](const Ctx& c) { return c.bar() + c.check(); },
     [](const Ctx& c) {
       return sp(c.V(1) - c.V(2), c.V(2) - c.V(1), c.V(3) + c.V(0), -(c.V(0) + c.V(3)));
     },
     [](const Ctx& c) {
       return sp(c.V(0) + c.V(1), c.V(2) - c.V(3), c.V(0) - c.V(1), -(c.V(2) + c.V(3)));
     },
     "[V(n)+V(n+1)+(V(n+2)-V(n+3)) j ; V(n)-V(n+1)-(V(n+2)+V(n+3)) j]"},
};

std::string hyperbolic_str(const HyperbolicNumber& x) {
  return x.re.str() + (x.jpart.sign() < 0 ? "" : "+") + x.jpart.str() + "j";
}

std::string spinor_str(const HSpinor& x) {
  return "[" + hyperbolic_str(x.c1) + " ; " + hyperbolic_str(x.c2) + "]";
}

}  // namespace

std::vector<IdentityCheck> verify_conjugation_identities(const SequenceParams& p, long n_max,
                                                         const std::string& family_label) {
  if (n_max < 0) throw PreconditionError("n_max must be nonnegative");
  const std::vector<Rational> v = term_range(p, n_max + 6);

  std::vector<IdentityCheck> out;
  out.reserve(std::size(kIdentities));
  for (const auto& spec : kIdentities) {
    IdentityCheck check{spec.theorem, spec.index, family_label, n_max, IdentityStatus::Pass, ""};
    for (long n = spec.min_n; n <= n_max; ++n) {
      const Ctx ctx{v, n};
      const HSpinor lhs = spec.lhs(ctx);
      const HSpinor derived = spec.derived(ctx);
      if (lhs != derived) {
        check.status = IdentityStatus::Error;
        check.detail = spec.statement + std::string(": operator value ") + spinor_str(lhs) +
                       " diverged from its derived expansion " + spinor_str(derived) + " at n=" +
                       std::to_string(n);
        break;
      }
      const HSpinor printed = spec.printed(ctx);
      if (printed != lhs && check.status == IdentityStatus::Pass) {
        check.status = IdentityStatus::Discrepant;
        check.detail = spec.statement + std::string(": printed right side gives ") +
                       spinor_str(printed) + " but the expansion gives " + spinor_str(lhs) +
                       " at n=" + std::to_string(n) + "; derived correction: " + spec.derived_text;
      }
    }
    if (check.status == IdentityStatus::Pass) check.detail = spec.statement;
    out.push_back(std::move(check));
  }
  return out;
}

VerificationReport run_identity_suite(long n_max, const std::optional<std::string>& family) {
  VerificationReport report;

  std::vector<const FamilyDescriptor*> targets;
  if (family) {
    const FamilyDescriptor& f = family_lookup(*family);
    if (f.generic)
      throw PreconditionError("family '" + f.name +
                              "' is generic; supply explicit initial values instead");
    targets.push_back(&f);
  } else {
    targets = concrete_families();
  }

  for (const FamilyDescriptor* f : targets) {
    std::vector<IdentityCheck> checks = verify_conjugation_identities(f->params, n_max, f->name);
    std::size_t spec_index = 0;
    for (auto& check : checks) {
      const IdentitySpec& spec = kIdentities[spec_index++];
      const IdentityStatus want = expected_status(spec.expected, f->params);
      if (check.status == IdentityStatus::Error) {
        report.matches_manifest = false;
        report.regressions.push_back(f->name + " " + check.theorem + "#" +
                                     std::to_string(check.identity_index) + ": " + check.detail);
      } else if (check.status != want) {
        report.matches_manifest = false;
        report.regressions.push_back(
            f->name + " " + check.theorem + "#" + std::to_string(check.identity_index) +
            ": observed " + to_string(check.status) + " but the manifest expects " +
            to_string(want));
      }
      if (check.status == IdentityStatus::Discrepant) report.any_discrepant = true;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace tribospin
