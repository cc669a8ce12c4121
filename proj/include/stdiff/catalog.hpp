#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stdiff/errors.hpp"
#include "stdiff/fomcore.hpp"
#include "stdiff/record.hpp"

namespace stdiff {

/// Exact header line of a record file.
inline constexpr std::string_view kRecordCsvHeader =
    "name,year,reference,category,material,mass_kg,n_override,f0_hz,sqrt_sf,sqrt_sa,temp_k,quality,mode,"
    "location,secondhand,notes";

enum class DiagnosticKind {
    BadCsv,
    BadHeader,
    FieldCount,
    BadNumber,
    BadCategory,
    BadMaterial,
    BadValue,
    MissingRequired,
    DuplicateName,
};

std::string_view to_string(DiagnosticKind k) noexcept;

/// One problem in a record file. `row` is the 1-based line of the record
/// (the header is row 1).
struct Diagnostic {
    DiagnosticKind kind;
    std::size_t row = 0;
    std::string column;
    std::string message;
};

/// "row 3, column category: BadCategory: ..."
std::string to_string(const Diagnostic& d);

class CatalogError : public Error {
public:
    explicit CatalogError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Ordered, immutable list of records with unique names.
class Catalog {
public:
    Catalog() = default;
    /// Throws CatalogError (DuplicateName) or Error for invalid records.
    explicit Catalog(std::vector<ExperimentRecord> records);

    const std::vector<ExperimentRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }
    const ExperimentRecord& operator[](std::size_t i) const { return records_[i]; }

    /// Index of the record named `name`, or size() when absent.
    std::size_t find(std::string_view name) const noexcept;

    friend bool operator==(const Catalog&, const Catalog&) = default;

private:
    std::vector<ExperimentRecord> records_;
};

/// Parses a record file. Any problem makes the whole parse fail with a
/// CatalogError listing every diagnostic found.
Catalog parse_records(std::string_view csv, const PeriodicTable& pt = PeriodicTable::standard());

/// Writes the record file form; parse_records(serialize(c)) == c.
std::string serialize(const Catalog& c);

/// The reference dataset of 46 experiments.
const Catalog& embedded_table1();
std::string_view embedded_table1_csv() noexcept;

/// Derived columns as printed in the reference table, kept separate from the
/// record inputs so that regressions test computation, not transcription.
struct PrintedRow {
    std::string name;
    double n_nuclei;
    double sqrt_sf;
    double sqrt_sa;
    double fom;
};

const std::vector<PrintedRow>& table1_printed();

std::vector<FomResult> evaluate_all(const Catalog& cat, const PeriodicTable& pt = PeriodicTable::standard(),
                                    const Constants& c = default_constants());

enum class RankFilter { All, AbsoluteOnEarth };

std::string_view to_string(RankFilter f) noexcept;
std::optional<RankFilter> parse_filter(std::string_view text) noexcept;

/// Record indices ascending by FOM, ties broken by name. AbsoluteOnEarth
/// drops differential and off-Earth records.
std::vector<std::size_t> rank(const Catalog& cat, std::span<const FomResult> results, RankFilter filter);

/// Per category (taxonomy order), the k lowest-FOM record indices.
std::vector<std::size_t> select_for_figure(const Catalog& cat, std::span<const FomResult> results, int k = 3);

}  // namespace stdiff
