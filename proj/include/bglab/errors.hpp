#ifndef BGLAB_ERRORS_HPP
#define BGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bglab {

// Shared error taxonomy. The CLI maps `code()` onto its machine-readable
// error objects, so codes are stable strings rather than enum values.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string &code() const { return code_; }

  private:
    std::string code_;
};

inline Error err_zero_polynomial(const std::string &m = "zero polynomial") { return Error("ZeroPolynomial", m); }
inline Error err_not_a_field(const std::string &m) { return Error("NotAField", m); }
inline Error err_div_by_zero(const std::string &m = "division by zero") { return Error("DivByZero", m); }
inline Error err_field_mismatch(const std::string &m = "elements live in different fields") { return Error("FieldMismatch", m); }
inline Error err_not_invertible(const std::string &m = "matrix is singular") { return Error("NotInvertible", m); }
inline Error err_not_unipotent(const std::string &m = "matrix is not unipotent") { return Error("NotUnipotent", m); }
inline Error err_zero_element(const std::string &m = "element is zero") { return Error("ZeroElement", m); }
inline Error err_var_mismatch(const std::string &m = "incompatible variable sets") { return Error("VarMismatch", m); }
inline Error err_bad_truncation(const std::string &m = "truncation degree out of range") { return Error("BadTruncation", m); }
inline Error err_degenerate_resultant(const std::string &m = "input has degree zero in z") { return Error("DegenerateResultant", m); }
inline Error err_too_many_exceptions(const std::string &m = "more than one non-semisimple generator") { return Error("TooManyExceptions", m); }
inline Error err_no_suitable_eigenvalue(const std::string &m = "no eigenvalue escapes the roots of unity") { return Error("NoSuitableEigenvalue", m); }
inline Error err_lemma_violation(const std::string &m = "every z-coefficient vanishes on all observations") { return Error("LemmaViolation", m); }
inline Error err_no_point_found(const std::string &m = "no admissible rational point within budget") { return Error("NoPointFound", m); }
inline Error err_zero_witness(const std::string &m = "witness entry is the zero function") { return Error("ZeroWitness", m); }
inline Error err_not_regular(const std::string &m = "characteristic polynomial is not squarefree") { return Error("NotRegular", m); }
inline Error err_dimension_mismatch(const std::string &m = "matrix dimensions do not match") { return Error("DimensionMismatch", m); }
inline Error err_parse(const std::string &m) { return Error("parse", m); }

// Violation of an internal postcondition; indicates a bug, not bad input.
inline Error err_internal(const std::string &m) { return Error("Internal", m); }

} // namespace bglab

#endif
