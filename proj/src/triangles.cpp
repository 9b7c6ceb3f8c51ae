#include "eulerian/triangles.hpp"

#include <stdexcept>

namespace eulerian {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::Dtilde: return "Dtilde";
        case Family::BrentiD: return "BrentiD";
    }
    throw std::logic_error("family_name: bad enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "D") return Family::D;
    if (name == "Dtilde") return Family::Dtilde;
    if (name == "BrentiD") return Family::BrentiD;
    throw std::invalid_argument("unknown family: '" + name + "'");
}

Triangle::Triangle(Family family, std::vector<Row> rows) : family_(family), rows_(std::move(rows)) {}

const Row& Triangle::row(int n) const {
    if (n < 0 || n > max_row()) throw std::out_of_range("Triangle::row: n out of range");
    return rows_[static_cast<size_t>(n)];
}

const BigInt& Triangle::at(int n, int k) const {
    const Row& r = row(n);
    if (k < 0 || k > n) throw std::out_of_range("Triangle::at: k outside 0..n");
    return r[static_cast<size_t>(k)];
}

void Triangle::validate() const {
    for (int n = 0; n <= max_row(); ++n) {
        const Row& r = rows_[static_cast<size_t>(n)];
        if (static_cast<int>(r.size()) != n + 1)
            throw std::logic_error("triangle row " + std::to_string(n) + " has wrong length");
        BigInt sum = 0;
        for (const BigInt& v : r) {
            if (v < 0) throw std::logic_error("negative triangle entry at n=" + std::to_string(n));
            sum += v;
        }
        const bool even = n % 2 == 0;
        switch (family_) {
            case Family::A:
                if (r[0] != 1) throw std::logic_error("A(n,0) != 1");
                if (n >= 1 && r.back() != 0) throw std::logic_error("A(n,n) != 0");
                if (sum != factorial(n)) throw std::logic_error("A row sum != n!");
                break;
            case Family::B:
                if (r[0] != 1 || r.back() != 1) throw std::logic_error("B boundary != 1");
                if (sum != pow_bigint(2, static_cast<unsigned>(n)) * factorial(n))
                    throw std::logic_error("B row sum != 2^n n!");
                break;
            case Family::D:
                if (r[0] != 1) throw std::logic_error("D(n,0) != 1");
                if (r.back() != (even ? 1 : 0)) throw std::logic_error("D(n,n) boundary");
                if (n >= 1 && sum != pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n))
                    throw std::logic_error("D row sum != 2^(n-1) n!");
                break;
            case Family::Dtilde:
                if (r[0] != 0) throw std::logic_error("Dtilde(n,0) != 0");
                if (r.back() != (even ? 0 : 1)) throw std::logic_error("Dtilde(n,n) boundary");
                if (n >= 1 && sum != pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n))
                    throw std::logic_error("Dtilde row sum != 2^(n-1) n!");
                break;
            case Family::BrentiD:
                // Rows 0 and 1 are the conventional constants [1] and [1,1].
                if (n >= 2 && (r[0] != 1 || r.back() != 1))
                    throw std::logic_error("BrentiD boundary != 1");
                if (n >= 2 && sum != pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n))
                    throw std::logic_error("BrentiD row sum != 2^(n-1) n!");
                break;
        }
    }
}

namespace {

Row next_row_a(const Row& prev, int n) {
    Row r(static_cast<size_t>(n) + 1);
    r[0] = 1;
    for (int k = 1; k < n; ++k)
        r[static_cast<size_t>(k)] =
            BigInt(n - k) * prev[static_cast<size_t>(k - 1)] + BigInt(k + 1) * prev[static_cast<size_t>(k)];
    if (n >= 1) r[static_cast<size_t>(n)] = 0;
    return r;
}

Row next_row_b(const Row& prev, int n) {
    Row r(static_cast<size_t>(n) + 1);
    r[0] = 1;
    for (int k = 1; k < n; ++k)
        r[static_cast<size_t>(k)] = BigInt(2 * n - 2 * k + 1) * prev[static_cast<size_t>(k - 1)] +
                                    BigInt(2 * k + 1) * prev[static_cast<size_t>(k)];
    if (n >= 1) r[static_cast<size_t>(n)] = 1;
    return r;
}

// One step of the coupled recurrence; prev_d / prev_dt are rows n-1.
std::pair<Row, Row> next_rows_d(const Row& prev_d, const Row& prev_dt, int n) {
    Row d(static_cast<size_t>(n) + 1), dt(static_cast<size_t>(n) + 1);
    d[0] = 1;
    dt[0] = 0;
    for (int k = 1; k < n; ++k) {
        const BigInt& d0 = prev_d[static_cast<size_t>(k)];
        const BigInt& d1 = prev_d[static_cast<size_t>(k - 1)];
        const BigInt& t0 = prev_dt[static_cast<size_t>(k)];
        const BigInt& t1 = prev_dt[static_cast<size_t>(k - 1)];
        d[static_cast<size_t>(k)] =
            BigInt(k + 1) * d0 + BigInt(n - k) * d1 + BigInt(k) * t0 + BigInt(n - k + 1) * t1;
        dt[static_cast<size_t>(k)] =
            BigInt(k + 1) * t0 + BigInt(n - k) * t1 + BigInt(k) * d0 + BigInt(n - k + 1) * d1;
    }
    if (n >= 1) {
        d[static_cast<size_t>(n)] = n % 2 == 0 ? 1 : 0;
        dt[static_cast<size_t>(n)] = n % 2 == 0 ? 0 : 1;
    }
    return {std::move(d), std::move(dt)};
}

void require_nonneg(int n) {
    if (n < 0) throw std::out_of_range("row index must be nonnegative");
}

}  // namespace

Row row_a(int n) {
    require_nonneg(n);
    Row r{BigInt(1)};
    for (int m = 1; m <= n; ++m) r = next_row_a(r, m);
    return r;
}

BigInt closed_form_a(int n, int k) {
    require_nonneg(n);
    if (k < 0 || k > n) throw std::out_of_range("closed_form_a: k outside 0..n");
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(n + 1, k - j) * pow_bigint(j + 1, static_cast<unsigned>(n));
        sum += (k - j) % 2 == 0 ? term : -term;
    }
    return sum;
}

Row row_b(int n) {
    require_nonneg(n);
    Row r{BigInt(1)};
    for (int m = 1; m <= n; ++m) r = next_row_b(r, m);
    return r;
}

BigInt closed_form_b(int n, int k) {
    require_nonneg(n);
    if (k < 0 || k > n) throw std::out_of_range("closed_form_b: k outside 0..n");
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(n + 1, k - j) * pow_bigint(2 * j + 1, static_cast<unsigned>(n));
        sum += (k - j) % 2 == 0 ? term : -term;
    }
    return sum;
}

std::pair<Row, Row> coupled_rows_d(int n) {
    require_nonneg(n);
    Row d{BigInt(1)}, dt{BigInt(0)};
    for (int m = 1; m <= n; ++m) {
        auto next = next_rows_d(d, dt, m);
        d = std::move(next.first);
        dt = std::move(next.second);
    }
    return {std::move(d), std::move(dt)};
}

Row independent_row_d(int n, Family family) {
    require_nonneg(n);
    if (family != Family::D && family != Family::Dtilde)
        throw std::invalid_argument("independent_row_d: family must be D or Dtilde");
    const bool primary = family == Family::D;
    Row r{BigInt(primary ? 1 : 0)};
    for (int m = 1; m <= n; ++m) {
        Row next(static_cast<size_t>(m) + 1);
        next[0] = primary ? 1 : 0;
        for (int k = 1; k < m; ++k) {
            BigInt corr = binomial(m - 1, k - 1);
            if (k % 2 != 0) corr = -corr;
            if (!primary) corr = -corr;
            next[static_cast<size_t>(k)] = BigInt(2 * k + 1) * r[static_cast<size_t>(k)] +
                                           BigInt(2 * m - 2 * k + 1) * r[static_cast<size_t>(k - 1)] + corr;
        }
        const bool even = m % 2 == 0;
        next[static_cast<size_t>(m)] = primary == even ? 1 : 0;
        r = std::move(next);
    }
    return r;
}

BigInt d_from_b(int n, int k, Family family) {
    require_nonneg(n);
    if (k < 0 || k > n) throw std::out_of_range("d_from_b: k outside 0..n");
    if (family != Family::D && family != Family::Dtilde)
        throw std::invalid_argument("d_from_b: family must be D or Dtilde");
    BigInt b = closed_form_b(n, k);
    BigInt corr = binomial(n, k);
    if (k % 2 != 0) corr = -corr;
    BigInt sum = family == Family::D ? BigInt(b + corr) : BigInt(b - corr);
    if (sum % 2 != 0) throw std::logic_error("d_from_b: parity assertion failed (arithmetic bug)");
    return sum / 2;
}

bool difference_check(int n) {
    require_nonneg(n);
    auto [d, dt] = coupled_rows_d(n);
    for (int k = 0; k <= n; ++k) {
        BigInt expect = binomial(n, k);
        if (k % 2 != 0) expect = -expect;
        if (d[static_cast<size_t>(k)] - dt[static_cast<size_t>(k)] != expect) return false;
    }
    return true;
}

bool symmetry_check_d(int n) {
    require_nonneg(n);
    auto [d, dt] = coupled_rows_d(n);
    for (int k = 0; k <= n; ++k) {
        const size_t rk = static_cast<size_t>(n - k);
        if (n % 2 == 0) {
            if (d[static_cast<size_t>(k)] != d[rk]) return false;
            if (dt[static_cast<size_t>(k)] != dt[rk]) return false;
        } else {
            if (d[static_cast<size_t>(k)] != dt[rk]) return false;
            if (dt[static_cast<size_t>(k)] != d[rk]) return false;
        }
    }
    return true;
}

Triangle build_triangle(Family family, int n_max) {
    require_nonneg(n_max);
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    switch (family) {
        case Family::A: {
            Row r{BigInt(1)};
            rows.push_back(r);
            for (int n = 1; n <= n_max; ++n) {
                r = next_row_a(r, n);
                rows.push_back(r);
            }
            break;
        }
        case Family::B: {
            Row r{BigInt(1)};
            rows.push_back(r);
            for (int n = 1; n <= n_max; ++n) {
                r = next_row_b(r, n);
                rows.push_back(r);
            }
            break;
        }
        case Family::D:
        case Family::Dtilde: {
            Row d{BigInt(1)}, dt{BigInt(0)};
            rows.push_back(family == Family::D ? d : dt);
            for (int n = 1; n <= n_max; ++n) {
                auto next = next_rows_d(d, dt, n);
                d = std::move(next.first);
                dt = std::move(next.second);
                rows.push_back(family == Family::D ? d : dt);
            }
            break;
        }
        case Family::BrentiD:
            throw std::invalid_argument("build_triangle: BrentiD has no recurrence route");
    }
    return Triangle(family, std::move(rows));
}

bool is_unimodal(const Row& row) {
    size_t i = 1;
    while (i < row.size() && row[i - 1] <= row[i]) ++i;
    while (i < row.size() && row[i - 1] >= row[i]) ++i;
    return i >= row.size();
}

namespace {

void scan_sequence(const std::vector<BigInt>& seq, const std::string& label, ConjectureScan& out) {
    for (size_t i = 1; i < seq.size(); ++i) {
        if (seq[i - 1] > seq[i])
            out.violations.push_back(label + " decreases at position " + std::to_string(i));
        else if (seq[i - 1] == seq[i])
            out.weak_ties.push_back(label + " ties at position " + std::to_string(i));
    }
}

}  // namespace

ConjectureScan scan_conjectures(int n_max) {
    if (n_max < 1) throw std::out_of_range("scan_conjectures: n_max must be >= 1");
    ConjectureScan out;
    out.n_max = n_max;

    Triangle d = build_triangle(Family::D, n_max);
    Triangle dt = build_triangle(Family::Dtilde, n_max);
    for (const Triangle* tri : {&d, &dt}) {
        const std::string fam = family_name(tri->family());
        for (int n = 0; n <= n_max; ++n) {
            ++out.rows_checked;
            if (!is_unimodal(tri->row(n)))
                out.violations.push_back("row family=" + fam + " n=" + std::to_string(n) + " not unimodal");
        }

        // Column diagonal: entries T(n+k, k), n >= 0. Offset diagonal:
        // entries T(n+k, n), n >= 0. Both conjectured strictly increasing
        // for every fixed k >= 1.
        for (int k = 1; k < n_max; ++k) {
            std::vector<BigInt> column, offset;
            for (int n = 0; n + k <= n_max; ++n) {
                column.push_back(tri->at(n + k, k));
                offset.push_back(tri->at(n + k, n));
            }
            out.diagonals_checked += 2;
            scan_sequence(column, "column-diagonal family=" + fam + " k=" + std::to_string(k), out);
            scan_sequence(offset, "offset-diagonal family=" + fam + " k=" + std::to_string(k), out);
        }
    }
    return out;
}

}  // namespace eulerian
