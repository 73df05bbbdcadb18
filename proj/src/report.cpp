#include "pvar/report.hpp"

namespace pvar {

CheckRecord& InequalityReport::add(std::string name, double lhs, double rhs, double constant,
                                   CheckWitness witness, const CheckTolerance& tol) {
    CheckRecord c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.constant = constant;
    c.slack = constant * rhs - lhs;
    c.pass = lhs <= constant * rhs + tol.margin(lhs, constant * rhs);
    c.witness = std::move(witness);
    checks.push_back(std::move(c));
    return checks.back();
}

}  // namespace pvar
