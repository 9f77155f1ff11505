#include "lerchlab/big_real.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace lerchlab {

BigReal BigReal::from_string(const std::string& s, long prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal: cannot parse '" + s + "'");
    return r;
}

std::string BigReal::str(long digits) const {
    if (digits < 2) digits = 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
    return std::string(buf.data());
}

}  // namespace lerchlab
