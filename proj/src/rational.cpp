#include "liequant/rational.hpp"

#include <sstream>

namespace liequant {

std::string rat_to_string(const BigRat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << "/" << rat_den(q);
    return os.str();
}

BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw error("zero denominator in rational literal: " + s);
    return BigRat(num) / BigRat(den);
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_to_string(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat_to_string(im_) + "*i";
    if (re_ == 0) return imag;
    std::string out = "(" + rat_to_string(re_);
    if (im_ > 0)
        out += "+" + imag;
    else
        out += "-" + (im_ == -1 ? std::string("i") : rat_to_string(-im_) + "*i");
    return out + ")";
}

} // namespace liequant
