#pragma once

#include <functional>
#include <string>

namespace crosswash::log {

using Handler = std::function<void(const std::string&)>;

// Default handler writes "warning: ..." to stderr. Passing an empty handler
// restores the default. Thread-safe.
void set_warning_handler(Handler handler);
void warn(const std::string& message);

}  // namespace crosswash::log
