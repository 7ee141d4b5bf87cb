#pragma once

#include "logcoh/arrangements/arrangement.hpp"
#include "logcoh/pairdata/pair.hpp"
#include "logcoh/specseq/complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace logcoh {

class UnknownFixture : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FixtureKind { Pair, Arrangement, Complex };

/// Names in the shipped catalog, in listing order.
std::vector<std::string> fixture_names();
FixtureKind fixture_kind(const std::string& name);

NCPairData fixture_pair(const std::string& name);
Arrangement fixture_arrangement(const std::string& name);
FilteredComplex<Rational> fixture_complex(const std::string& name);

/// Byte-stable file contents for the named fixture.
std::string fixture_text(const std::string& name);

/// Pair fixtures whose strata are all connected and which validate.
std::vector<std::string> connected_pair_fixtures();

}  // namespace logcoh
