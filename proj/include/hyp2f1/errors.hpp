#pragma once

#include <stdexcept>
#include <string>

namespace hyp2f1 {

enum class ErrorKind {
  Domain,             // argument outside the mathematical domain of an operation
  Pole,               // gamma/Pochhammer pole
  OutsideDomain,      // z outside the convergence region of a method
  ParamDomain,        // parameters violate a method's constraint (e.g. c > b > 0)
  BranchCut,          // z on [1, inf)
  IntegerDifference,  // b - a is an integer (Buhring)
  Singularity,        // z hits a singular point of a coefficient recursion
  RecurrenceBreakdown,
  NoMethod,
  Config,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define HYP2F1_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

HYP2F1_DEFINE_ERROR(DomainError, Domain)
HYP2F1_DEFINE_ERROR(PoleError, Pole)
HYP2F1_DEFINE_ERROR(OutsideDomain, OutsideDomain)
HYP2F1_DEFINE_ERROR(ParamDomainError, ParamDomain)
HYP2F1_DEFINE_ERROR(BranchCutError, BranchCut)
HYP2F1_DEFINE_ERROR(IntegerDifferenceError, IntegerDifference)
HYP2F1_DEFINE_ERROR(SingularityError, Singularity)
HYP2F1_DEFINE_ERROR(RecurrenceBreakdown, RecurrenceBreakdown)
HYP2F1_DEFINE_ERROR(NoMethodError, NoMethod)
HYP2F1_DEFINE_ERROR(ConfigError, Config)

#undef HYP2F1_DEFINE_ERROR

}  // namespace hyp2f1
