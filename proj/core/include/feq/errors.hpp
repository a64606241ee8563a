#pragma once

#include <stdexcept>
#include <string>

namespace feq {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FEQ_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

FEQ_DEFINE_ERROR(BothZero);
FEQ_DEFINE_ERROR(NotSquarefree);
FEQ_DEFINE_ERROR(DegreeTooSmall);
FEQ_DEFINE_ERROR(AmbiguousHint);
FEQ_DEFINE_ERROR(DivisionByZero);
FEQ_DEFINE_ERROR(FieldMismatch);
FEQ_DEFINE_ERROR(PrecisionExhausted);
FEQ_DEFINE_ERROR(UnsupportedDegree);
FEQ_DEFINE_ERROR(PreconditionFailed);
FEQ_DEFINE_ERROR(StructureMismatch);

#undef FEQ_DEFINE_ERROR

} // namespace feq
