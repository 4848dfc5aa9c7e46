#include "crosswash/log.hpp"

#include <iostream>
#include <mutex>

namespace crosswash::log {
namespace {

std::mutex g_mutex;
Handler g_handler;

void default_handler(const std::string& message) {
    std::cerr << "warning: " << message << "\n";
}

}  // namespace

void set_warning_handler(Handler handler) {
    std::lock_guard lock(g_mutex);
    g_handler = std::move(handler);
}

void warn(const std::string& message) {
    Handler handler;
    {
        std::lock_guard lock(g_mutex);
        handler = g_handler;
    }
    if (handler) {
        handler(message);
    } else {
        default_handler(message);
    }
}

}  // namespace crosswash::log
