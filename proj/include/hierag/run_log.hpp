#pragma once

#include <mutex>
#include <string>
#include <vector>

namespace hierag {

// Append-only event log shared across a pipeline run. Lines carry no wall
// clock so that persisted logs stay reproducible.
class RunLog {
public:
    struct Event {
        std::string kind;   // "truncation", "retry", "info"
        std::string detail;
    };

    void add(std::string kind, std::string detail) {
        std::lock_guard<std::mutex> lock(mutex_);
        events_.push_back({std::move(kind), std::move(detail)});
    }

    std::vector<Event> events() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return events_;
    }

    std::size_t count(std::string_view kind) const {
        std::lock_guard<std::mutex> lock(mutex_);
        std::size_t n = 0;
        for (const auto& e : events_)
            if (e.kind == kind) ++n;
        return n;
    }

    std::string to_text() const {
        std::lock_guard<std::mutex> lock(mutex_);
        std::string out;
        for (const auto& e : events_) {
            out += e.kind;
            out += ' ';
            out += e.detail;
            out += '\n';
        }
        return out;
    }

private:
    mutable std::mutex mutex_;
    std::vector<Event> events_;
};

} // namespace hierag
