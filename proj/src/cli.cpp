/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "nw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nw/block.hpp"
#include "nw/design.hpp"
#include "nw/io.hpp"

namespace nw {

namespace {

using nlohmann::json;

// Writes either to --out or to the default stream.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw Error("cannot write " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

DesignFormat parse_format(const std::string& name) {
    if (name == "sets")
        return DesignFormat::sets;
    if (name == "matrix")
        return DesignFormat::matrix;
    throw InvalidParameter("format must be \"sets\" or \"matrix\", got \"" +
                           name + "\"");
}

void report_text(std::ostream& out, const DesignFamily& family,
                 const RhoReport& report) {
    Rational standard{report.rho_standard};
    out << "n " << family.size() << '\n'
        << "q " << family.set_size << '\n'
        << "l " << family.universe_size << '\n'
        << "max_overlap " << report.max_overlap << '\n'
        << "rho_standard " << report.rho_standard.get_str() << " ("
        << to_float_string(standard) << ")\n"
        << "rho_weak_n " << to_fraction_string(report.rho_weak_n) << " ("
        << to_float_string(report.rho_weak_n) << ")\n"
        << "rho_weak_prefix " << to_fraction_string(report.rho_weak_prefix)
        << " (" << to_float_string(report.rho_weak_prefix) << ")\n";
}

json report_json(const DesignFamily& family, const RhoReport& report) {
    return json{
        {"n", family.size()},
        {"q", family.set_size},
        {"l", family.universe_size},
        {"max_overlap", report.max_overlap},
        {"rho_standard", report.rho_standard.get_str()},
        {"rho_standard_float", Rational{report.rho_standard}.get_d()},
        {"rho_weak_n", to_fraction_string(report.rho_weak_n)},
        {"rho_weak_n_float", report.rho_weak_n.get_d()},
        {"rho_weak_prefix", to_fraction_string(report.rho_weak_prefix)},
        {"rho_weak_prefix_float", report.rho_weak_prefix.get_d()},
    };
}

int cmd_gen(std::uint32_t q, std::uint64_t n, const std::string& format_name,
            const std::string& out_path, std::ostream& out) {
    const DesignFormat format = parse_format(format_name);
    const FieldSpec field(q);
    const DesignFamily family = build_refined_nw(field, n);
    OutputTarget target(out_path, out);
    write_design(target.stream(), family, format);
    return 0;
}

int cmd_verify(const std::string& in_path, bool as_json,
               const std::string& out_path, std::ostream& out) {
    const DesignFamily family = read_design_file(in_path);
    const RhoReport report = verify(family);
    OutputTarget target(out_path, out);
    if (as_json)
        target.stream() << report_json(family, report).dump() << '\n';
    else
        report_text(target.stream(), family, report);
    return 0;
}

int cmd_block(std::uint32_t q, std::uint64_t n, const std::string& out_path,
              std::ostream& out) {
    const FieldSpec field(q);
    const BlockDesign design = build_block_design(field, n);
    write_design_file(out_path, design.combined, DesignFormat::sets);

    json sidecar{
        {"b", design.last_block},
        {"sizes", design.sizes},
        {"n_prime", design.combined.size()},
        {"l_prime", design.combined.universe_size},
        {"rho_input", to_fraction_string(design.rho_input)},
        {"rho_input_float", design.rho_input.get_d()},
        {"n", design.base.size()},
        {"q", design.base.set_size},
        {"l", design.base.universe_size},
    };
    const std::string sidecar_path = out_path + ".json";
    std::ofstream sidecar_file(sidecar_path);
    if (!sidecar_file)
        throw Error("cannot write " + sidecar_path);
    sidecar_file << sidecar.dump() << '\n';
    out << "wrote " << out_path << " and " << sidecar_path << '\n';
    return 0;
}

int cmd_sweep(const std::vector<std::uint32_t>& q_list,
              const std::vector<std::uint64_t>& n_list,
              const std::string& out_path, std::ostream& out) {
    // Validate the whole grid before emitting anything.
    std::vector<FieldSpec> fields;
    for (std::uint32_t q : q_list) {
        const FieldSpec field(q);
        for (std::uint64_t n : n_list) {
            if (n == 0)
                throw InvalidParameter("n must be at least 1");
            if (auto limit = poly_index_limit(field); limit && n > *limit)
                throw TooManySets("n = " + std::to_string(n) +
                                  " exceeds q^q = " + std::to_string(*limit) +
                                  " for q = " + std::to_string(q));
        }
        fields.push_back(field);
    }

    OutputTarget target(out_path, out);
    std::ostream& csv = target.stream();
    csv << "q,n,rho_weak_n,rho_weak_prefix,rho_standard,bound,ok\n";
    for (std::size_t fi = 0; fi < fields.size(); ++fi) {
        const FieldSpec& field = fields[fi];
        const Rational bound = rho_upper_bound(field.order());
        for (std::uint64_t n : n_list) {
            const RhoReport report = verify(build_refined_nw(field, n));
            const bool ok = report.rho_weak_prefix < bound;
            csv << field.order() << ',' << n << ','
                << to_fraction_string(report.rho_weak_n) << ','
                << to_fraction_string(report.rho_weak_prefix) << ','
                << report.rho_standard.get_str() << ','
                << to_fraction_string(bound) << ','
                << (ok ? "true" : "false") << '\n';
        }
    }
    return 0;
}

int cmd_lambda_table(std::uint32_t q, unsigned d_max,
                     const std::string& out_path, std::ostream& out) {
    const FieldSpec field(q);
    if (d_max >= q)
        throw DegreeOutOfRange("d-max must be below q = " + std::to_string(q) +
                               ", got " + std::to_string(d_max));
    OutputTarget target(out_path, out);
    std::ostream& table = target.stream();
    table << "q d j Lambda\n";
    for (unsigned d = 0; d <= d_max; ++d)
        for (GfElement j = 0; j <= 1; ++j)
            table << q << ' ' << d << ' ' << j << ' '
                  << lambda_sum_closed_form(field, d, j).get_str() << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Nisan-Wigderson combinatorial design toolkit"};
    app.require_subcommand(1);

    std::uint32_t q = 0;
    std::uint64_t n = 0;
    unsigned d_max = 0;
    std::string format_name = "sets";
    std::string out_path;
    std::string in_path;
    bool as_json = false;
    std::vector<std::uint32_t> q_list;
    std::vector<std::uint64_t> n_list;

    auto* gen = app.add_subcommand("gen", "Build a refined Nisan-Wigderson "
                                          "design and write it out");
    gen->add_option("--q", q, "Set size (a power of 2)")->required();
    gen->add_option("--n", n, "Number of sets (at most q^q)")->required();
    gen->add_option("--format", format_name, "Output format: sets|matrix");
    gen->add_option("--out", out_path, "Output file (default: stdout)");

    auto* ver = app.add_subcommand("verify", "Measure the overlap parameters "
                                             "of a design file");
    ver->add_option("input", in_path, "Design file (sets or matrix form)")
        ->required();
    ver->add_flag("--json", as_json, "Emit the report as JSON");
    ver->add_option("--out", out_path, "Output file (default: stdout)");

    auto* blk = app.add_subcommand("block", "Assemble the rho = 1 block "
                                            "design for (q, n)");
    blk->add_option("--q", q, "Set size (a power of 2)")->required();
    blk->add_option("--n", n, "Number of base sets (at most q^q)")->required();
    blk->add_option("--out", out_path, "Output design file; a .json sidecar "
                                       "is written next to it")
        ->required();

    auto* swp = app.add_subcommand("sweep", "Tabulate overlap parameters "
                                            "over a (q, n) grid as CSV");
    swp->add_option("--q", q_list, "Set sizes (powers of 2)")
        ->required()
        ->delimiter(',');
    swp->add_option("--n", n_list, "Set counts (each at most q^q)")
        ->delimiter(',');
    swp->add_option("--out", out_path, "Output CSV file (default: stdout)");

    auto* lam = app.add_subcommand("lambda-table", "Exact lambda sums of the "
                                                   "fixed-top-coefficient "
                                                   "polynomial families");
    lam->add_option("--q", q, "Field order (a power of 2)")->required();
    lam->add_option("--d-max", d_max, "Largest degree to tabulate (< q)")
        ->required();
    lam->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(gen))
            return cmd_gen(q, n, format_name, out_path, out);
        if (app.got_subcommand(ver))
            return cmd_verify(in_path, as_json, out_path, out);
        if (app.got_subcommand(blk))
            return cmd_block(q, n, out_path, out);
        if (app.got_subcommand(swp))
            return cmd_sweep(q_list, n_list, out_path, out);
        if (app.got_subcommand(lam))
            return cmd_lambda_table(q, d_max, out_path, out);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace nw
