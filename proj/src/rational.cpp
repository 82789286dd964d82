#include "qheun/rational.hpp"

#include <ostream>

namespace qheun {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case Errc::NotPolynomial: return "NOT_POLYNOMIAL";
    case Errc::LeadingCoeffVanishes: return "LEADING_COEFF_VANISHES";
    case Errc::LeadingZeroAt: return "LEADING_ZERO_AT";
    case Errc::UnboundParameter: return "UNBOUND_PARAMETER";
    case Errc::WrongShape: return "WRONG_SHAPE";
    case Errc::DegreeDefect: return "DEGREE_DEFECT";
    case Errc::InsufficientMoments: return "INSUFFICIENT_MOMENTS";
    case Errc::MomentSystemSingular: return "MOMENT_SYSTEM_SINGULAR";
    case Errc::SImaginary: return "S_IMAGINARY";
    case Errc::InvalidG1: return "INVALID_G1";
    case Errc::BetaOutOfRange: return "BETA_OUT_OF_RANGE";
    case Errc::NonfinitePotential: return "NONFINITE_POTENTIAL";
    case Errc::NoConvergence: return "NO_CONVERGENCE";
    case Errc::DegeneratePsi: return "DEGENERATE_PSI";
    case Errc::MismatchedProblems: return "MISMATCHED_PROBLEMS";
    case Errc::ResidualNonzero: return "RESIDUAL_NONZERO";
    case Errc::BadInput: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

Rat Rat::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return Rat(n);
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    if (d == 0) fail(Errc::BadInput, "zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(q);
  } catch (const std::invalid_argument&) {
    fail(Errc::BadInput, "malformed rational '" + text + "'");
  }
}

Rat Rat::pow(unsigned k) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
  mpq_class q(n, d);
  return Rat(q);  // already canonical: gcd preserved under powers
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

bool Rat::exact_sqrt(Rat* root) const {
  if (sign() < 0) return false;
  if (mpz_perfect_square_p(num().get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den().get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
  if (root) *root = Rat(mpq_class(rn, rd));
  return true;
}

std::string Rat::str() const {
  return num().get_str() + "/" + den().get_str();
}

std::string Rat::pretty() const {
  if (is_integer()) return num().get_str();
  return str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.pretty();
}

}  // namespace qheun
