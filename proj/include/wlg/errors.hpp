#ifndef WLG_ERRORS_HPP
#define WLG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wlg {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WLG_DEFINE_ERROR(Name)                 \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

WLG_DEFINE_ERROR(InvalidSpec);
WLG_DEFINE_ERROR(NonIntegralRescale);
WLG_DEFINE_ERROR(SearchBudgetExceeded);
WLG_DEFINE_ERROR(ReductionFailed);
WLG_DEFINE_ERROR(DimensionMismatch);
WLG_DEFINE_ERROR(InvalidPolynomial);
WLG_DEFINE_ERROR(EmptyPolynomial);
WLG_DEFINE_ERROR(InvalidPartition);
WLG_DEFINE_ERROR(NotStrongPartition);
WLG_DEFINE_ERROR(NotFano);
WLG_DEFINE_ERROR(LegendMismatch);
WLG_DEFINE_ERROR(InexactDivision);
WLG_DEFINE_ERROR(ParseError);

#undef WLG_DEFINE_ERROR

} // namespace wlg

#endif // WLG_ERRORS_HPP
