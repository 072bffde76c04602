#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fock {

enum class CheckStatus { kPass, kFail, kInconclusive, kExploratory };

std::string_view to_string(CheckStatus status);

/// 12 significant digits, stable across runs. NaN serializes to the empty
/// string so optional columns (a_rec before its seeds) stay blank.
std::string format_number(double value);

struct CheckItem {
    std::string id;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::kPass;
    std::string note;
};

/// Named check results with a deterministic serialization: items are sorted
/// by check_id, the data section carries no timestamps, and identical flag
/// sets reproduce identical bytes. A timestamp line appears in the header
/// only when explicitly requested.
class VerificationReport {
public:
    void set_header(std::string key, std::string value);
    void add(CheckItem item);

    /// Items sorted by id.
    const std::vector<CheckItem>& items() const;

    int count(CheckStatus status) const;
    bool any_fail() const { return count(CheckStatus::kFail) > 0; }
    int exit_code() const { return any_fail() ? 1 : 0; }

    std::string to_csv(bool stamp = false) const;
    std::string to_json(bool stamp = false) const;

private:
    std::vector<std::pair<std::string, std::string>> header_;
    mutable std::vector<CheckItem> items_;
    mutable bool sorted_ = true;
};

/// Column-oriented table with the same serialization contract as the report;
/// backs the seq / bound / sharpness / bathtub commands. Cells are
/// preformatted strings so every command controls its own number formatting.
class Table {
public:
    Table(std::string schema, std::vector<std::string> columns);

    void set_meta(std::string key, std::string value);
    void add_row(std::vector<std::string> cells);

    std::string to_csv(bool stamp = false) const;
    std::string to_json(bool stamp = false) const;

private:
    std::string schema_;
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace fock
