#include "imcert/rational.hpp"

#include "imcert/errors.hpp"

namespace imcert {

Rat rational(long p, long q) {
    if (q == 0) throw InputError("zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw InputError("empty rational");
    std::string t = s;
    if (t.find('/') == std::string::npos) t += "/1";
    Rat r;
    if (r.set_str(t, 10) != 0) throw InputError("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_approx(const Rat& q) { return q.get_d(); }

}  // namespace imcert
