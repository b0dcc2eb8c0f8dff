#ifndef TFFT_ERRORS_HPP
#define TFFT_ERRORS_HPP

#include <stdexcept>

namespace tfft {

/// A compression was requested for a length that does not factor as asked.
class InvalidCompression : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Even and odd halves handed to the combine step differ in length.
class InvalidCombine : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace tfft

#endif // TFFT_ERRORS_HPP
