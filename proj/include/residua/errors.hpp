#pragma once

#include <stdexcept>
#include <string>

namespace residua {

struct NegativeValuation : std::runtime_error {
    explicit NegativeValuation(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateComposite : std::logic_error {
    explicit DegenerateComposite(const std::string& m) : std::logic_error(m) {}
};
struct IterationCapExceeded : std::logic_error {
    explicit IterationCapExceeded(const std::string& m) : std::logic_error(m) {}
};
struct ConstantFactor : std::runtime_error {
    explicit ConstantFactor(const std::string& m) : std::runtime_error(m) {}
};
struct ConstantReduction : std::runtime_error {
    explicit ConstantReduction(const std::string& m) : std::runtime_error(m) {}
};
struct NoConsistentLift : std::runtime_error {
    explicit NoConsistentLift(const std::string& m) : std::runtime_error(m) {}
};
struct VertexMass : std::runtime_error {
    explicit VertexMass(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidFamily : std::runtime_error {
    explicit InvalidFamily(const std::string& m) : std::runtime_error(m) {}
};
struct NonDegenerate : std::runtime_error {
    explicit NonDegenerate(const std::string& m) : std::runtime_error(m) {}
};
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct ExceptionalAmbiguity : std::runtime_error {
    explicit ExceptionalAmbiguity(const std::string& m) : std::runtime_error(m) {}
};
struct UncertifiedExceptional : std::runtime_error {
    explicit UncertifiedExceptional(const std::string& m) : std::runtime_error(m) {}
};
struct BadParameter : std::runtime_error {
    explicit BadParameter(const std::string& m) : std::runtime_error(m) {}
};
struct RootSolveFailure : std::runtime_error {
    explicit RootSolveFailure(const std::string& m) : std::runtime_error(m) {}
};
struct InconclusiveClustering : std::runtime_error {
    explicit InconclusiveClustering(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace residua
