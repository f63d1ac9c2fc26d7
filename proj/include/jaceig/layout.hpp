#ifndef JACEIG_LAYOUT_HPP
#define JACEIG_LAYOUT_HPP

#include <string>
#include <vector>

#include "jaceig/errors.hpp"

namespace jaceig {

// Flat ordering of the expansion variables for a branch with right arm r and
// left arm rt.  Groups appear in the order x, y, z, xt, yt, zt; a group is
// empty when its defining matrix entries do not exist:
//   x  (r entries)        needs r >= 1
//   y  (r entries)        needs r >= 1 and rt >= 1
//   z  (r-1 entries)      needs r >= 2
//   xt (rt entries)       needs rt >= 1
//   yt (rt entries)       needs r >= 1 and rt >= 1
//   zt (rt-1 entries)     needs rt >= 2
// Total D = 3r-1 + 3rt-1 generically, 2r-1 when rt = 0, 2rt-1 when r = 0.
// The matching slow variables (s, t, w, st, tt, wt) use the same offsets.
class VarLayout {
public:
    VarLayout(int r, int rt) : r_(r), rt_(rt) {
        if (r < 0 || rt < 0 || r + rt < 1)
            throw BadIndex("layout requires r, rt >= 0 and r + rt >= 1");
        nx_ = r;
        ny_ = (r >= 1 && rt >= 1) ? r : 0;
        nz_ = r >= 1 ? r - 1 : 0;
        nxt_ = rt;
        nyt_ = (r >= 1 && rt >= 1) ? rt : 0;
        nzt_ = rt >= 1 ? rt - 1 : 0;
    }

    int r() const { return r_; }
    int rt() const { return rt_; }
    int dim() const { return r_ + rt_ + 1; }
    bool corner() const { return r_ == 0 || rt_ == 0; }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    int nxt() const { return nxt_; }
    int nyt() const { return nyt_; }
    int nzt() const { return nzt_; }

    int x_off() const { return 0; }
    int y_off() const { return nx_; }
    int z_off() const { return nx_ + ny_; }
    int xt_off() const { return nx_ + ny_ + nz_; }
    int yt_off() const { return nx_ + ny_ + nz_ + nxt_; }
    int zt_off() const { return nx_ + ny_ + nz_ + nxt_ + nyt_; }

    int nvars() const { return nx_ + ny_ + nz_ + nxt_ + nyt_ + nzt_; }

    // Human-facing names, e.g. "x0", "yt2"; flat order.
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(nvars());
        auto group = [&](const char* g, int n) {
            for (int i = 0; i < n; ++i) out.push_back(g + std::to_string(i));
        };
        group("x", nx_);
        group("y", ny_);
        group("z", nz_);
        group("xt", nxt_);
        group("yt", nyt_);
        group("zt", nzt_);
        return out;
    }

    bool operator==(const VarLayout& o) const { return r_ == o.r_ && rt_ == o.rt_; }

private:
    int r_, rt_;
    int nx_, ny_, nz_, nxt_, nyt_, nzt_;
};

} // namespace jaceig

#endif
