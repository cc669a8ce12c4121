#include "stdiff/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "text_util.hpp"

namespace stdiff {

std::string_view to_string(DiagnosticKind k) noexcept {
    switch (k) {
        case DiagnosticKind::BadCsv: return "BadCsv";
        case DiagnosticKind::BadHeader: return "BadHeader";
        case DiagnosticKind::FieldCount: return "FieldCount";
        case DiagnosticKind::BadNumber: return "BadNumber";
        case DiagnosticKind::BadCategory: return "BadCategory";
        case DiagnosticKind::BadMaterial: return "BadMaterial";
        case DiagnosticKind::BadValue: return "BadValue";
        case DiagnosticKind::MissingRequired: return "MissingRequired";
        case DiagnosticKind::DuplicateName: return "DuplicateName";
    }
    return "?";
}

std::string to_string(const Diagnostic& d) {
    std::string out = "row " + std::to_string(d.row);
    if (!d.column.empty()) out += ", column " + d.column;
    out += ": ";
    out += to_string(d.kind);
    out += ": ";
    out += d.message;
    return out;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& ds) {
    std::string out = std::to_string(ds.size()) + " problem(s) in record file";
    if (!ds.empty()) out += "; first: " + to_string(ds.front());
    return out;
}

}  // namespace

CatalogError::CatalogError(std::vector<Diagnostic> diagnostics)
    : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Catalog::Catalog(std::vector<ExperimentRecord> records) : records_(std::move(records)) {
    std::set<std::string_view> seen;
    std::vector<Diagnostic> dup;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        validate(records_[i]);
        if (!seen.insert(records_[i].name).second) {
            dup.push_back({DiagnosticKind::DuplicateName, i + 2, "name", "duplicate record '" + records_[i].name + "'"});
        }
    }
    if (!dup.empty()) throw CatalogError(std::move(dup));
}

std::size_t Catalog::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < records_.size(); ++i) {
        if (records_[i].name == name) return i;
    }
    return records_.size();
}

namespace {

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

// RFC 4180 style: comma separated, '"' quoting with '""' escapes, CRLF or LF.
std::vector<CsvRow> read_csv(std::string_view text, std::vector<Diagnostic>& diags) {
    std::vector<CsvRow> rows;
    CsvRow row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;
    row.line = line;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        // A lone empty field is a blank line.
        if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
        row = CsvRow{};
        row.line = line;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field_started) {
                    diags.push_back({DiagnosticKind::BadCsv, line, "", "quote inside unquoted field"});
                }
                in_quotes = true;
                field_started = true;
                break;
            case ',': end_field(); break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') break;
                field += c;
                break;
            case '\n':
                ++line;
                end_row();
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (in_quotes) diags.push_back({DiagnosticKind::BadCsv, line, "", "unterminated quoted field"});
    if (!field.empty() || !row.fields.empty()) end_row();
    return rows;
}

constexpr std::string_view kColumns[] = {"name",    "year",   "reference", "category", "material",   "mass_kg",
                                         "n_override", "f0_hz", "sqrt_sf", "sqrt_sa",  "temp_k",     "quality",
                                         "mode",    "location", "secondhand", "notes"};
constexpr std::size_t kColumnCount = std::size(kColumns);

enum Col : std::size_t {
    kName, kYear, kReference, kCategory, kMaterial, kMass, kNOverride, kF0,
    kSqrtSf, kSqrtSa, kTemp, kQuality, kMode, kLocation, kSecondhand, kNotes
};

// Collects diagnostics while converting the cells of one row.
class RowReader {
public:
    RowReader(const CsvRow& row, std::vector<Diagnostic>& diags) : row_(row), diags_(diags) {}

    const std::string& cell(Col c) const { return row_.fields[c]; }

    void report(DiagnosticKind kind, Col c, std::string message) {
        diags_.push_back({kind, row_.line, std::string(kColumns[c]), std::move(message)});
        ok_ = false;
    }

    std::optional<double> number(Col c, bool required) {
        const auto& text = cell(c);
        if (text.empty()) {
            if (required) report(DiagnosticKind::MissingRequired, c, "value required");
            return std::nullopt;
        }
        auto v = detail::parse_double(text);
        if (!v || !std::isfinite(*v)) {
            report(DiagnosticKind::BadNumber, c, "'" + text + "' is not a finite decimal number");
            return std::nullopt;
        }
        return v;
    }

    std::optional<double> positive(Col c, bool required) {
        auto v = number(c, required);
        if (v && !(*v > 0)) {
            report(DiagnosticKind::BadValue, c, "must be > 0");
            return std::nullopt;
        }
        return v;
    }

    std::optional<double> non_negative(Col c, bool required) {
        auto v = number(c, required);
        if (v && *v < 0) {
            report(DiagnosticKind::BadValue, c, "must be >= 0");
            return std::nullopt;
        }
        return v;
    }

    bool ok() const { return ok_; }

private:
    const CsvRow& row_;
    std::vector<Diagnostic>& diags_;
    bool ok_ = true;
};

template <class Parse>
auto keyword(RowReader& rr, Col c, Parse parse, std::string_view allowed) -> decltype(parse(std::string_view{})) {
    const auto& text = rr.cell(c);
    if (text.empty()) {
        rr.report(DiagnosticKind::MissingRequired, c, "value required");
        return std::nullopt;
    }
    auto v = parse(text);
    if (!v) rr.report(DiagnosticKind::BadValue, c, "'" + text + "' is not one of " + std::string(allowed));
    return v;
}

std::optional<ExperimentRecord> read_record(const CsvRow& row, const PeriodicTable& pt,
                                            std::vector<Diagnostic>& diags) {
    if (row.fields.size() != kColumnCount) {
        diags.push_back({DiagnosticKind::FieldCount, row.line, "",
                         "expected " + std::to_string(kColumnCount) + " fields, found " +
                             std::to_string(row.fields.size())});
        return std::nullopt;
    }
    RowReader rr(row, diags);

    if (rr.cell(kName).empty()) rr.report(DiagnosticKind::MissingRequired, kName, "value required");

    std::optional<long> year;
    if (rr.cell(kYear).empty()) {
        rr.report(DiagnosticKind::MissingRequired, kYear, "value required");
    } else if (year = detail::parse_long(rr.cell(kYear)); !year) {
        rr.report(DiagnosticKind::BadNumber, kYear, "'" + rr.cell(kYear) + "' is not an integer");
    }

    std::optional<Category> category;
    if (rr.cell(kCategory).empty()) {
        rr.report(DiagnosticKind::MissingRequired, kCategory, "value required");
    } else if (category = parse_category(rr.cell(kCategory)); !category) {
        rr.report(DiagnosticKind::BadCategory, kCategory, "'" + rr.cell(kCategory) + "' is not a known category");
    }

    std::optional<MaterialSpec> material;
    if (rr.cell(kMaterial).empty()) {
        rr.report(DiagnosticKind::MissingRequired, kMaterial, "value required");
    } else {
        try {
            material = parse_material(rr.cell(kMaterial), pt);
        } catch (const Error& e) {
            rr.report(DiagnosticKind::BadMaterial, kMaterial, e.what());
        }
    }

    auto mass = rr.positive(kMass, true);
    auto n_override = rr.number(kNOverride, false);
    if (n_override && *n_override < 1) {
        rr.report(DiagnosticKind::BadValue, kNOverride, "must be >= 1");
        n_override.reset();
    }
    auto f0 = rr.positive(kF0, false);
    auto sqrt_sf = rr.non_negative(kSqrtSf, false);
    auto sqrt_sa = rr.non_negative(kSqrtSa, false);
    if (rr.cell(kSqrtSf).empty() && rr.cell(kSqrtSa).empty()) {
        rr.report(DiagnosticKind::MissingRequired, kSqrtSf, "one of sqrt_sf or sqrt_sa is required");
    }
    auto temp = rr.non_negative(kTemp, false);
    auto quality = rr.positive(kQuality, false);

    auto mode = keyword(rr, kMode, parse_mode, "{absolute, differential}");
    auto location = keyword(rr, kLocation, parse_location, "{earth, space}");
    auto secondhand = keyword(
        rr, kSecondhand,
        [](std::string_view t) -> std::optional<bool> {
            if (t == "true") return true;
            if (t == "false") return false;
            return std::nullopt;
        },
        "{true, false}");

    if (!rr.ok()) return std::nullopt;

    auto wrap = [](std::optional<double> v, Unit u) -> std::optional<Quantity> {
        if (!v) return std::nullopt;
        return Quantity(*v, u);
    };
    return ExperimentRecord{
        .name = rr.cell(kName),
        .year = static_cast<int>(*year),
        .reference = rr.cell(kReference),
        .category = *category,
        .material = std::move(*material),
        .mass = kilograms(*mass),
        .n_override = n_override,
        .f0 = wrap(f0, Unit::Hertz),
        .sqrt_sf = wrap(sqrt_sf, Unit::ForceAsd),
        .sqrt_sa = wrap(sqrt_sa, Unit::AccelAsd),
        .temp = wrap(temp, Unit::Kelvin),
        .quality = quality,
        .mode = *mode,
        .location = *location,
        .secondhand = *secondhand,
        .notes = rr.cell(kNotes),
    };
}

}  // namespace

Catalog parse_records(std::string_view csv, const PeriodicTable& pt) {
    std::vector<Diagnostic> diags;
    auto rows = read_csv(csv, diags);

    if (rows.empty()) {
        diags.push_back({DiagnosticKind::BadHeader, 1, "", "missing header"});
        throw CatalogError(std::move(diags));
    }
    std::string header;
    for (std::size_t i = 0; i < rows.front().fields.size(); ++i) {
        if (i) header += ',';
        header += rows.front().fields[i];
    }
    if (header != kRecordCsvHeader) {
        diags.push_back({DiagnosticKind::BadHeader, rows.front().line, "",
                         "header must be exactly '" + std::string(kRecordCsvHeader) + "'"});
        throw CatalogError(std::move(diags));
    }

    std::vector<ExperimentRecord> records;
    std::set<std::string> names;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto rec = read_record(rows[i], pt, diags);
        if (!rec) continue;
        if (!names.insert(rec->name).second) {
            diags.push_back({DiagnosticKind::DuplicateName, rows[i].line, "name",
                             "duplicate record '" + rec->name + "'"});
            continue;
        }
        records.push_back(std::move(*rec));
    }
    if (!diags.empty()) throw CatalogError(std::move(diags));
    return Catalog(std::move(records));
}

namespace {

std::string csv_number(const std::optional<double>& v) { return v ? detail::shortest(*v) : std::string(); }

std::string csv_number(const std::optional<Quantity>& q) {
    return q ? detail::shortest(q->value()) : std::string();
}

}  // namespace

std::string serialize(const Catalog& c) {
    std::string out(kRecordCsvHeader);
    out += '\n';
    for (const auto& r : c.records()) {
        const std::string cells[] = {
            detail::csv_text(r.name),
            std::to_string(r.year),
            detail::csv_text(r.reference),
            std::string(to_string(r.category)),
            to_string(r.material),
            detail::shortest(r.mass.value()),
            csv_number(r.n_override),
            csv_number(r.f0),
            csv_number(r.sqrt_sf),
            csv_number(r.sqrt_sa),
            csv_number(r.temp),
            csv_number(r.quality),
            std::string(to_string(r.mode)),
            std::string(to_string(r.location)),
            r.secondhand ? "true" : "false",
            detail::csv_text(r.notes),
        };
        for (std::size_t i = 0; i < std::size(cells); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    }
    return out;
}

std::vector<FomResult> evaluate_all(const Catalog& cat, const PeriodicTable& pt, const Constants& c) {
    std::vector<FomResult> out;
    out.reserve(cat.size());
    for (const auto& r : cat.records()) out.push_back(evaluate_record(r, pt, c));
    return out;
}

std::string_view to_string(RankFilter f) noexcept {
    return f == RankFilter::AbsoluteOnEarth ? "absolute-on-earth" : "all";
}

std::optional<RankFilter> parse_filter(std::string_view text) noexcept {
    if (text == "all") return RankFilter::All;
    if (text == "absolute-on-earth") return RankFilter::AbsoluteOnEarth;
    return std::nullopt;
}

namespace {

void require_aligned(const Catalog& cat, std::span<const FomResult> results) {
    if (results.size() != cat.size()) throw Error("results do not match catalog size");
}

auto by_fom_then_name(const Catalog& cat, std::span<const FomResult> results) {
    return [&cat, results](std::size_t a, std::size_t b) {
        const double fa = results[a].fom.value();
        const double fb = results[b].fom.value();
        if (fa != fb) return fa < fb;
        return cat[a].name < cat[b].name;
    };
}

}  // namespace

std::vector<std::size_t> rank(const Catalog& cat, std::span<const FomResult> results, RankFilter filter) {
    require_aligned(cat, results);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& r = cat[i];
        if (filter == RankFilter::AbsoluteOnEarth &&
            (r.mode == Mode::Differential || r.location == Location::Space)) {
            continue;
        }
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), by_fom_then_name(cat, results));
    return idx;
}

std::vector<std::size_t> select_for_figure(const Catalog& cat, std::span<const FomResult> results, int k) {
    require_aligned(cat, results);
    if (k < 1) throw Error("k must be >= 1");
    const auto ranked = rank(cat, results, RankFilter::All);
    std::vector<std::size_t> out;
    for (auto category : kAllCategories) {
        int taken = 0;
        for (auto i : ranked) {
            if (taken == k) break;
            if (cat[i].category == category) {
                out.push_back(i);
                ++taken;
            }
        }
    }
    return out;
}

}  // namespace stdiff
