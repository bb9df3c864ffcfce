#include "metaplectic/params.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace metaplectic {

void Params::validate() const {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (r % 2 == 0) throw std::invalid_argument("r must be odd");
    if (r < 1 || r >= n())
        throw std::invalid_argument("r must satisfy 1 <= r < 2p+1 = " + std::to_string(n()));
    if (std::gcd(static_cast<long long>(r), n()) != 1)
        throw std::invalid_argument("r must be coprime to 2p+1 = " + std::to_string(n()));
    if (kappa != 1 && kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("lambda must be +1 or -1");
}

}  // namespace metaplectic
