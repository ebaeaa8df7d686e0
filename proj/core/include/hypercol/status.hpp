#pragma once

#include <optional>
#include <string_view>

namespace hypercol {

/// Verdict of a coloring or extension run. "No extension" is reported as
/// Uncolorable.
enum class Status { Colorable, Uncolorable, PromiseViolation };

constexpr std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Colorable: return "COLORABLE";
    case Status::Uncolorable: return "UNCOLORABLE";
    case Status::PromiseViolation: return "PROMISE-VIOLATION";
    }
    return "?";
}

constexpr std::optional<Status> status_from_string(std::string_view s)
{
    if (s == "COLORABLE")
        return Status::Colorable;
    if (s == "UNCOLORABLE")
        return Status::Uncolorable;
    if (s == "PROMISE-VIOLATION")
        return Status::PromiseViolation;
    return std::nullopt;
}

} // namespace hypercol
