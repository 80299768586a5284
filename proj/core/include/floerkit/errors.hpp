#pragma once
#include <stdexcept>
#include <string>

namespace floerkit {

// Domain errors carry a stable name so the CLI can report them uniformly.
struct DomainError : std::runtime_error {
    std::string name;
    DomainError(std::string n, const std::string& msg)
        : std::runtime_error(n + ": " + msg), name(std::move(n)) {}
};

struct SyntaxError : DomainError {
    explicit SyntaxError(const std::string& m) : DomainError("SyntaxError", m) {}
};
struct SubgroupError : DomainError {
    explicit SubgroupError(const std::string& m) : DomainError("SubgroupError", m) {}
};
struct NormalizationImpossible : DomainError {
    explicit NormalizationImpossible(const std::string& m) : DomainError("NormalizationImpossible", m) {}
};
struct DisconnectedGradingGraph : DomainError {
    explicit DisconnectedGradingGraph(const std::string& m) : DomainError("DisconnectedGradingGraph", m) {}
};
struct FlipNotFound : DomainError {
    explicit FlipNotFound(const std::string& m) : DomainError("FlipNotFound", m) {}
};
struct ZeroSurgeryUnsupported : DomainError {
    explicit ZeroSurgeryUnsupported(const std::string& m) : DomainError("ZeroSurgeryUnsupported", m) {}
};
struct TowerInReducedPart : DomainError {
    explicit TowerInReducedPart(const std::string& m) : DomainError("TowerInReducedPart", m) {}
};
struct AGViolated : DomainError {
    explicit AGViolated(const std::string& m) : DomainError("AGViolated", m) {}
};
struct HypothesisUnmet : DomainError {
    explicit HypothesisUnmet(const std::string& m) : DomainError("HypothesisUnmet", m) {}
};
struct NotInvolution : DomainError {
    explicit NotInvolution(const std::string& m) : DomainError("NotInvolution", m) {}
};
struct BadBasis : DomainError {
    explicit BadBasis(const std::string& m) : DomainError("BadBasis", m) {}
};
struct BadClass : DomainError {
    explicit BadClass(const std::string& m) : DomainError("BadClass", m) {}
};
struct DimensionMismatch : DomainError {
    explicit DimensionMismatch(const std::string& m) : DomainError("DimensionMismatch", m) {}
};
struct NotCharacteristic : DomainError {
    explicit NotCharacteristic(const std::string& m) : DomainError("NotCharacteristic", m) {}
};

}  // namespace floerkit
