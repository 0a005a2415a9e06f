#pragma once

#include <stdexcept>
#include <string>

namespace degcond {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};
struct not_graphical : error {
    using error::error;
};
struct length_mismatch : error {
    using error::error;
};
struct degree_out_of_range : error {
    using error::error;
};
struct scale_exceeded : error {
    using error::error;
};
struct param_out_of_domain : error {
    using error::error;
};
// n below a theorem's stated minimum, or failing a stated parity constraint
struct sequence_too_short : error {
    using error::error;
};
struct param_out_of_range : error {
    using error::error;
};
struct empty_part : error {
    using error::error;
};
struct no_witness_family : error {
    using error::error;
};

}  // namespace degcond
