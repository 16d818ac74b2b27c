#ifndef SEAMCARVE_ERROR_HPP
#define SEAMCARVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace seamcarve {

enum class ErrorCode {
    decode_failed,
    unsupported_format,
    too_small,
    too_narrow,
    bad_target,
    undefined_metric,
    dimension_mismatch,
    invalid_config,
    io_failed,
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::decode_failed: return "decode error";
    case ErrorCode::unsupported_format: return "unsupported format";
    case ErrorCode::too_small: return "image too small";
    case ErrorCode::too_narrow: return "image too narrow";
    case ErrorCode::bad_target: return "bad target size";
    case ErrorCode::undefined_metric: return "undefined metric";
    case ErrorCode::dimension_mismatch: return "dimension mismatch";
    case ErrorCode::invalid_config: return "invalid configuration";
    case ErrorCode::io_failed: return "I/O failure";
    }
    return "unknown error";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace seamcarve

#endif // SEAMCARVE_ERROR_HPP
