#pragma once

#include <stdexcept>
#include <string>

namespace catam {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct occupied_position_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct insufficient_strength_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct missing_table_entry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct malformed_window_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace catam
