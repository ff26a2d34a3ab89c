#pragma once

#include <stdexcept>
#include <string>

namespace mtt {

struct InvalidConfig : std::runtime_error {
    explicit InvalidConfig(const std::string& what) : std::runtime_error(what) {}
};

struct CoincidentPositions : std::runtime_error {
    explicit CoincidentPositions(const std::string& what) : std::runtime_error(what) {}
};

struct SingularProbe : std::runtime_error {
    explicit SingularProbe(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewUavs : std::runtime_error {
    explicit TooFewUavs(const std::string& what) : std::runtime_error(what) {}
};

struct SingleCluster : std::runtime_error {
    explicit SingleCluster(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySubSwarm : std::runtime_error {
    explicit EmptySubSwarm(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : std::runtime_error {
    explicit ZeroVector(const std::string& what) : std::runtime_error(what) {}
};

struct StuckAtBalance : std::runtime_error {
    explicit StuckAtBalance(const std::string& what) : std::runtime_error(what) {}
};

struct NoPathFound : std::runtime_error {
    explicit NoPathFound(const std::string& what) : std::runtime_error(what) {}
};

struct UnstableGrid : std::runtime_error {
    explicit UnstableGrid(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroGain : std::runtime_error {
    explicit ZeroGain(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace mtt
