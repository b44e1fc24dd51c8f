// Error types shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace wbr {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define WBR_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

WBR_DEFINE_ERROR(DivisionByZero);
WBR_DEFINE_ERROR(MixedModes);
WBR_DEFINE_ERROR(NotSquare);
WBR_DEFINE_ERROR(IndexOutOfRange);
WBR_DEFINE_ERROR(CrossesWall);
WBR_DEFINE_ERROR(WallMismatch);
WBR_DEFINE_ERROR(SizeLimitExceeded);
WBR_DEFINE_ERROR(NotCentral);
WBR_DEFINE_ERROR(NotInSpan);
WBR_DEFINE_ERROR(RankDeficient);
WBR_DEFINE_ERROR(ZeroDenominator);
WBR_DEFINE_ERROR(DimensionMismatch);
WBR_DEFINE_ERROR(CompletionBudgetExceeded);
WBR_DEFINE_ERROR(PoleAtQ1);
WBR_DEFINE_ERROR(LimitMismatch);
WBR_DEFINE_ERROR(ClosedFormMismatch);
WBR_DEFINE_ERROR(InternalError);

#undef WBR_DEFINE_ERROR

} // namespace wbr
