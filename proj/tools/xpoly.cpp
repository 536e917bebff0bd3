// Command line front end: decompose a skeleton into certified surface
// blocks, verify an externally supplied partition, or list the difference
// cycles of a modulus.
//
// Exit codes: 0 success, 1 I/O failure, 2 ineligible input,
// 3 verification rejection, 4 construction failure, 5 parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xpoly/document.hpp"
#include "xpoly/version.hpp"

namespace {

using namespace xpoly;

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::string off_path(const std::string& base, std::size_t block, std::size_t blocks) {
    if (blocks == 1) {
        return base;
    }
    const std::string suffix = "_block" + std::to_string(block + 1);
    const std::size_t dot = base.find_last_of('.');
    if (dot == std::string::npos || dot == 0) {
        return base + suffix;
    }
    return base.substr(0, dot) + suffix + base.substr(dot);
}

int run_decompose(const std::string& kind, int k, const std::string& format,
                  const std::string& out, bool use_search) {
    const SkeletonSpec spec = kind == "cross" ? SkeletonSpec::cross_polytope(k)
                                              : SkeletonSpec::simplex(k);
    if (kind == "simplex" && !spec.decomposition_eligible()) {
        throw InputError("ineligible k: the simplex decomposition requires k = 1 or 5 "
                         "(mod 6) and k >= 5, got " +
                         std::to_string(k));
    }
    const Partition partition =
        use_search ? search_partition(spec, policy_for(spec))
                   : (spec.kind() == SkeletonKind::CrossPolytope ? cross_partition(k)
                                                                 : simplex_partition(k));

    if (format == "off") {
        const std::vector<std::string> docs = off_documents(partition);
        if (out.empty()) {
            for (const std::string& text : docs) {
                std::cout << text;
            }
            return 0;
        }
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (!write_file(off_path(out, i, docs.size()), docs[i])) {
                return 1;
            }
        }
        return 0;
    }

    const PartitionDocument doc = document_from(partition);
    const std::string text = format == "json" ? to_json(doc) : to_table(doc);
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    return write_file(out, text) ? 0 : 1;
}

int run_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());

    const ParsedPartitionInput input = parse_partition_input(text);
    const Partition partition = verify_partition(input.spec, input.blocks);
    for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
        const PartitionBlock& b = partition.blocks[i];
        std::cout << "block " << i + 1 << ": OK";
        const auto cls = block_class(b);
        std::cout << " (" << (cls ? to_string(*cls) : std::string("mixed classes")) << ", "
                  << b.complex.triangles().size() << " triangles)\n";
    }
    std::cout << "accepted: " << partition.blocks.size() << " blocks cover "
              << partition.coverage.block_triangles << " of "
              << partition.coverage.skeleton_triangles << " skeleton triangles\n";
    return 0;
}

int run_enumerate(int n) {
    for (const DifferenceCycle& dc : enumerate_all(Modulus(n))) {
        std::cout << to_string(dc) << "  orbit " << dc.orbit_size() << "  ";
        if (dc.achiral()) {
            std::cout << "achiral\n";
        } else {
            std::cout << "chiral, mirror " << to_string(mirror(dc)) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic surface decompositions of cross polytope and simplex 2-skeletons"};
    app.set_version_flag("--version", std::string(tool_name) + " " + std::string(tool_version));
    app.require_subcommand(1);

    std::string kind;
    int k = 0;
    std::string format = "table";
    std::string out;
    bool use_search = false;
    CLI::App* dec = app.add_subcommand("decompose", "partition a skeleton into surface blocks");
    dec->add_option("kind", kind, "skeleton family")
        ->required()
        ->check(CLI::IsMember({"cross", "simplex"}));
    dec->add_option("k", k, "dimension parameter")->required();
    dec->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "off"}));
    dec->add_option("--out", out, "write output to PATH instead of stdout");
    dec->add_flag("--search", use_search, "use exact-cover search instead of the closed form");

    std::string verify_path;
    CLI::App* ver = app.add_subcommand("verify", "check an externally supplied partition");
    ver->add_option("file", verify_path, "JSON partition document or bare block list")
        ->required();

    int n = 0;
    CLI::App* enu = app.add_subcommand("enumerate", "list difference cycles mod n");
    enu->add_option("n", n, "modulus")->required();

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(dec)) {
            return run_decompose(kind, k, format, out, use_search);
        }
        if (app.got_subcommand(ver)) {
            return run_verify(verify_path);
        }
        if (app.got_subcommand(enu)) {
            return run_enumerate(n);
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const VerifyError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 3;
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
