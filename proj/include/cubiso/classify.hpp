#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubiso/core.hpp"
#include "cubiso/landmarks.hpp"

namespace cubiso {

struct ZeroFreeTerm : Error {
    using Error::Error;
};

struct TableMismatch : Error {
    std::vector<std::string> boundary_flags;
    TableMismatch(const std::string& what, std::vector<std::string> flags)
        : Error(what), boundary_flags(std::move(flags)) {}
};

enum class RegimeKind { DepressedBNeg, DepressedBZero, DepressedBPos, R1, R2, R3, R4, R5, R6, R7 };
enum class Sign { Neg = -1, Zero = 0, Pos = 1 };

struct Regime {
    RegimeKind kind = RegimeKind::DepressedBZero;
    Sign a_sign = Sign::Zero;
    int figure_id = 2;
    std::vector<std::string> boundary_flags;
};

enum class CountKind { OneReal, ThreeDistinct, DoubleSimple, TripleRoot };

struct RootCount {
    CountKind kind = CountKind::OneReal;
    // DoubleSimple: which extreme cubic (1 for c = c1, 2 for c = c2) and the closed-form roots
    int which = 0;
    double double_at = 0, simple_at = 0;
    // TripleRoot
    double triple_at = 0;

    int real_with_multiplicity() const { return kind == CountKind::OneReal ? 1 : 3; }
};

enum class TableId { I, II, III, IV, V, VI, ZeroRootCase };

struct SignPattern {
    int n_pos = 0, n_neg = 0, n_zero = 0;
    bool complex_pair = false;
    TableId table_id = TableId::I;

    bool same_signs(const SignPattern& o) const {
        return n_pos == o.n_pos && n_neg == o.n_neg && n_zero == o.n_zero && complex_pair == o.complex_pair;
    }
};

struct Classification {
    MonicCubic m;
    Regime regime;
    RootCount count;
    SignPattern signs;
    int c_slot = 1;
    bool zero_root = false;
    Landmarks landmarks;
};

std::string_view kind_name(RegimeKind k);
std::string_view count_name(CountKind k);
std::string_view table_name(TableId t);

Regime regime(double a, double b, const Tolerance& t = {});
RootCount count_real_roots(const MonicCubic& m, const Landmarks& lm, const Tolerance& t = {});

struct SlotLocation {
    int case_id = 1;
    double y = 0;  // -c after snapping onto a level within tolerance
    std::vector<std::string> flags;
};
SlotLocation locate_slot(int figure, const MonicCubic& m, const Landmarks& lm, const Tolerance& t = {});

// route 2: corrected summary-table predicates; nullopt when they do not decide (c = 0)
std::optional<SignPattern> table_signs(const MonicCubic& m, const Landmarks& lm, const RootCount& rc,
                                       const Tolerance& t = {});

SignPattern sign_classify(const MonicCubic& m, const Regime& r, const RootCount& rc, const Landmarks& lm,
                          const Tolerance& t = {});
Classification classify(const MonicCubic& m, const Tolerance& t = {});

}  // namespace cubiso
