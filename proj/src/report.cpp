#include "fock/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace fock {

namespace {

std::string sanitize_cell(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::kPass: return "PASS";
        case CheckStatus::kFail: return "FAIL";
        case CheckStatus::kInconclusive: return "INCONCLUSIVE";
        case CheckStatus::kExploratory: return "EXPLORATORY";
    }
    return "UNKNOWN";
}

std::string format_number(double value) {
    if (std::isnan(value)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void VerificationReport::set_header(std::string key, std::string value) {
    header_.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add(CheckItem item) {
    items_.push_back(std::move(item));
    sorted_ = false;
}

const std::vector<CheckItem>& VerificationReport::items() const {
    if (!sorted_) {
        std::sort(items_.begin(), items_.end(),
                  [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
        sorted_ = true;
    }
    return items_;
}

int VerificationReport::count(CheckStatus status) const {
    int c = 0;
    for (const auto& item : items_)
        if (item.status == status) ++c;
    return c;
}

std::string VerificationReport::to_csv(bool stamp) const {
    std::string out = "# schema: verify.v1\n";
    for (const auto& [key, value] : header_) out += "# " + key + ": " + value + "\n";
    if (stamp) out += "# stamp: " + timestamp_now() + "\n";
    out += "check_id,measured,expected,tolerance,status,note\n";
    for (const auto& item : items()) {
        out += item.id + "," + format_number(item.measured) + "," +
               format_number(item.expected) + "," + format_number(item.tolerance) + "," +
               std::string(to_string(item.status)) + "," + sanitize_cell(item.note) + "\n";
    }
    out += "# summary: pass=" + std::to_string(count(CheckStatus::kPass)) +
           " fail=" + std::to_string(count(CheckStatus::kFail)) +
           " inconclusive=" + std::to_string(count(CheckStatus::kInconclusive)) +
           " exploratory=" + std::to_string(count(CheckStatus::kExploratory)) + "\n";
    return out;
}

std::string VerificationReport::to_json(bool stamp) const {
    nlohmann::ordered_json doc;
    doc["schema"] = "verify.v1";
    nlohmann::ordered_json header = nlohmann::ordered_json::object();
    for (const auto& [key, value] : header_) header[key] = value;
    if (stamp) header["stamp"] = timestamp_now();
    doc["header"] = header;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& item : items()) {
        nlohmann::ordered_json row;
        row["check_id"] = item.id;
        row["measured"] = std::isnan(item.measured) ? nlohmann::ordered_json(nullptr)
                                                    : nlohmann::ordered_json(item.measured);
        row["expected"] = item.expected;
        row["tolerance"] = item.tolerance;
        row["status"] = std::string(to_string(item.status));
        row["note"] = item.note;
        rows.push_back(row);
    }
    doc["items"] = rows;
    doc["summary"] = {{"pass", count(CheckStatus::kPass)},
                      {"fail", count(CheckStatus::kFail)},
                      {"inconclusive", count(CheckStatus::kInconclusive)},
                      {"exploratory", count(CheckStatus::kExploratory)},
                      {"exit_code", exit_code()}};
    return doc.dump(2) + "\n";
}

Table::Table(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {}

void Table::set_meta(std::string key, std::string value) {
    meta_.emplace_back(std::move(key), std::move(value));
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size())
        throw std::invalid_argument("Table: row width does not match the column schema");
    rows_.push_back(std::move(cells));
}

std::string Table::to_csv(bool stamp) const {
    std::string out = "# schema: " + schema_ + "\n";
    for (const auto& [key, value] : meta_) out += "# " + key + ": " + value + "\n";
    if (stamp) out += "# stamp: " + timestamp_now() + "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out += (i ? "," : "") + columns_[i];
    out += "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + sanitize_cell(row[i]);
        out += "\n";
    }
    return out;
}

std::string Table::to_json(bool stamp) const {
    nlohmann::ordered_json doc;
    doc["schema"] = schema_;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta_) meta[key] = value;
    if (stamp) meta["stamp"] = timestamp_now();
    doc["meta"] = meta;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
        rows.push_back(obj);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

}  // namespace fock
