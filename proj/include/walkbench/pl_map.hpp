#pragma once

#include "walkbench/dyadic.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkbench {

enum class PLVariant { unit_interval, real_line };

/// Piecewise-affine increasing bijection with dyadic breakpoints and
/// power-of-two slopes. Piece i has value 2^{slope_exp[i]} * x + offset[i];
/// pieces are separated by the strictly increasing cut list, so there are
/// cuts()+1 pieces.
///
/// unit_interval: domain [0,1], cuts in (0,1), fixes 0 and 1.
/// real_line: domain R; the first and last pieces are translations by
/// integers (the Brin-Squier tail condition).
///
/// Canonical form (removable cuts dropped) is enforced at construction,
/// so equality of maps is equality of the stored data.
class PLMap {
public:
    struct Piece {
        int slope_exp;
        Dyadic offset;
        friend bool operator==(const Piece&, const Piece&) = default;
    };

    PLMap(PLVariant variant, std::vector<Dyadic> cuts, std::vector<Piece> pieces)
        : variant_(variant), cuts_(std::move(cuts)), pieces_(std::move(pieces)) {
        canonicalize();
        validate();
    }

    static PLMap identity(PLVariant variant) {
        return PLMap(variant, {}, {Piece{0, Dyadic(0)}});
    }

    PLVariant variant() const { return variant_; }
    const std::vector<Dyadic>& cuts() const { return cuts_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_identity() const {
        return cuts_.empty() && pieces_[0].slope_exp == 0 && pieces_[0].offset.is_zero();
    }

    /// Left/right tail translation amounts (real_line only).
    std::pair<BigInt, BigInt> tail_translations() const {
        if (variant_ != PLVariant::real_line)
            throw std::logic_error("tail_translations: real_line only");
        return {pieces_.front().offset.numerator(), pieces_.back().offset.numerator()};
    }

    Dyadic eval(const Dyadic& x) const {
        if (variant_ == PLVariant::unit_interval && (x < Dyadic(0) || x > Dyadic(1)))
            throw std::domain_error("pl_eval: point outside [0,1]");
        return apply(piece_index(x), x);
    }

    /// Exact preimage; defined on [0,1] resp. R since the map is a bijection.
    Dyadic eval_inverse(const Dyadic& y) const {
        if (variant_ == PLVariant::unit_interval && (y < Dyadic(0) || y > Dyadic(1)))
            throw std::domain_error("pl_eval_inverse: point outside [0,1]");
        std::size_t i = 0;
        while (i < cuts_.size() && apply(i + 1, cuts_[i]) < y) ++i;
        const Piece& p = pieces_[i];
        return (y - p.offset).scale_pow2(-p.slope_exp);
    }

    PLMap inverse() const {
        std::vector<Dyadic> cuts;
        cuts.reserve(cuts_.size());
        for (std::size_t i = 0; i < cuts_.size(); ++i) cuts.push_back(apply(i, cuts_[i]));
        std::vector<Piece> pieces;
        pieces.reserve(pieces_.size());
        for (const Piece& p : pieces_)
            pieces.push_back(Piece{-p.slope_exp, -p.offset.scale_pow2(-p.slope_exp)});
        return PLMap(variant_, std::move(cuts), std::move(pieces));
    }

    /// Composition (f o g)(x) = f(g(x)). Breakpoints of f are pulled back
    /// through g and merged with g's own.
    static PLMap compose(const PLMap& f, const PLMap& g) {
        if (f.variant_ != g.variant_)
            throw std::invalid_argument("compose: mixed PL variants");
        std::vector<Dyadic> cuts = g.cuts_;
        for (const Dyadic& c : f.cuts_) cuts.push_back(g.eval_inverse(c));
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        std::vector<Piece> pieces;
        pieces.reserve(cuts.size() + 1);
        for (std::size_t i = 0; i <= cuts.size(); ++i) {
            Dyadic sample = sample_point(f.variant_, cuts, i);
            const Piece& pg = g.pieces_[g.piece_index(sample)];
            const Piece& pf = f.pieces_[f.piece_index(g.apply(g.piece_index(sample), sample))];
            pieces.push_back(Piece{pf.slope_exp + pg.slope_exp,
                                   pg.offset.scale_pow2(pf.slope_exp) + pf.offset});
        }
        return PLMap(f.variant_, std::move(cuts), std::move(pieces));
    }

    friend bool operator==(const PLMap& a, const PLMap& b) {
        return a.variant_ == b.variant_ && a.cuts_ == b.cuts_ && a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }
    friend bool operator<(const PLMap& a, const PLMap& b) {
        if (a.variant_ != b.variant_) return a.variant_ < b.variant_;
        if (a.cuts_.size() != b.cuts_.size()) return a.cuts_.size() < b.cuts_.size();
        for (std::size_t i = 0; i < a.cuts_.size(); ++i)
            if (a.cuts_[i] != b.cuts_[i]) return a.cuts_[i] < b.cuts_[i];
        for (std::size_t i = 0; i < a.pieces_.size(); ++i) {
            if (a.pieces_[i].slope_exp != b.pieces_[i].slope_exp)
                return a.pieces_[i].slope_exp < b.pieces_[i].slope_exp;
            if (a.pieces_[i].offset != b.pieces_[i].offset)
                return a.pieces_[i].offset < b.pieces_[i].offset;
        }
        return false;
    }

    /// "unit[(e,c);b1;(e,c);b2;...]" / "line[...]": pieces alternate with the
    /// breakpoints separating them, offsets and breakpoints in the exact
    /// "m/2^k" form. Bit-exact round trip.
    std::string serialize() const {
        std::ostringstream os;
        os << (variant_ == PLVariant::unit_interval ? "unit[" : "line[");
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            if (i) os << ";" << cuts_[i - 1].format() << ";";
            os << "(" << pieces_[i].slope_exp << "," << pieces_[i].offset.format() << ")";
        }
        os << "]";
        return os.str();
    }

    static PLMap deserialize(const std::string& s) {
        auto bad = [&] { throw std::invalid_argument("bad PL map: '" + s + "'"); };
        PLVariant v;
        std::size_t pos;
        if (s.rfind("unit[", 0) == 0) {
            v = PLVariant::unit_interval;
            pos = 5;
        } else if (s.rfind("line[", 0) == 0) {
            v = PLVariant::real_line;
            pos = 5;
        } else {
            bad();
            throw std::logic_error("unreachable");
        }
        if (s.empty() || s.back() != ']') bad();
        std::vector<Dyadic> cuts;
        std::vector<Piece> pieces;
        std::string body = s.substr(pos, s.size() - pos - 1);
        std::istringstream is(body);
        std::string tok;
        bool expect_piece = true;
        while (std::getline(is, tok, ';')) {
            if (expect_piece) {
                if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') bad();
                auto comma = tok.find(',');
                if (comma == std::string::npos) bad();
                int e = std::stoi(tok.substr(1, comma - 1));
                pieces.push_back(Piece{e, Dyadic::parse(tok.substr(comma + 1, tok.size() - comma - 2))});
            } else {
                cuts.push_back(Dyadic::parse(tok));
            }
            expect_piece = !expect_piece;
        }
        if (pieces.empty() || pieces.size() != cuts.size() + 1) bad();
        return PLMap(v, std::move(cuts), std::move(pieces));
    }

private:
    /// Index of the piece whose closed interval contains x (at a cut both
    /// neighbours agree by continuity).
    std::size_t piece_index(const Dyadic& x) const {
        std::size_t lo = 0, hi = cuts_.size();
        while (lo < hi) {  // count cuts strictly below x
            std::size_t mid = (lo + hi) / 2;
            if (cuts_[mid] < x)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    Dyadic apply(std::size_t piece, const Dyadic& x) const {
        const Piece& p = pieces_[piece];
        return x.scale_pow2(p.slope_exp) + p.offset;
    }

    static Dyadic sample_point(PLVariant v, const std::vector<Dyadic>& cuts, std::size_t i) {
        if (cuts.empty()) return v == PLVariant::unit_interval ? Dyadic(1, 1) : Dyadic(0);
        if (i == 0) {
            if (v == PLVariant::unit_interval) return cuts.front().scale_pow2(-1);
            return cuts.front() - Dyadic(1);
        }
        if (i == cuts.size()) {
            if (v == PLVariant::unit_interval) return (cuts.back() + Dyadic(1)).scale_pow2(-1);
            return cuts.back() + Dyadic(1);
        }
        return (cuts[i - 1] + cuts[i]).scale_pow2(-1);
    }

    void canonicalize() {
        std::vector<Dyadic> cuts;
        std::vector<Piece> pieces{pieces_.front()};
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
            if (pieces_[i + 1] == pieces.back()) continue;  // removable breakpoint
            cuts.push_back(cuts_[i]);
            pieces.push_back(pieces_[i + 1]);
        }
        cuts_ = std::move(cuts);
        pieces_ = std::move(pieces);
    }

    void validate() const {
        if (pieces_.size() != cuts_.size() + 1)
            throw std::invalid_argument("PLMap: piece/cut count mismatch");
        for (std::size_t i = 0; i + 1 < cuts_.size(); ++i)
            if (!(cuts_[i] < cuts_[i + 1]))
                throw std::invalid_argument("PLMap: cuts not strictly increasing");
        for (std::size_t i = 0; i < cuts_.size(); ++i)
            if (apply(i, cuts_[i]) != apply(i + 1, cuts_[i]))
                throw std::invalid_argument("PLMap: discontinuous at breakpoint " + cuts_[i].format());
        if (variant_ == PLVariant::unit_interval) {
            if (!cuts_.empty() && (!(Dyadic(0) < cuts_.front()) || !(cuts_.back() < Dyadic(1))))
                throw std::invalid_argument("PLMap: unit-interval cuts must lie in (0,1)");
            if (eval(Dyadic(0)) != Dyadic(0) || eval(Dyadic(1)) != Dyadic(1))
                throw std::invalid_argument("PLMap: unit-interval map must fix 0 and 1");
        } else {
            const Piece& first = pieces_.front();
            const Piece& last = pieces_.back();
            if (first.slope_exp != 0 || !first.offset.is_integer() || last.slope_exp != 0 ||
                !last.offset.is_integer())
                throw std::invalid_argument("PLMap: real-line tails must be integer translations");
        }
    }

    PLVariant variant_;
    std::vector<Dyadic> cuts_;
    std::vector<Piece> pieces_;
};

}  // namespace walkbench
