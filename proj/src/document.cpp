#include "xpoly/document.hpp"

#include <sstream>

#include <json.hpp>

#include "xpoly/version.hpp"

namespace xpoly {

using nlohmann::json;

namespace {

std::string labeling_for(const SkeletonSpec& spec) {
    if (spec.kind() == SkeletonKind::CrossPolytope) {
        return vertex_labeling_convention(spec.k());
    }
    std::ostringstream os;
    os << "vertices are Z_" << spec.k() << " = {0, ..., " << spec.k() - 1 << "}";
    return os.str();
}

} // namespace

PartitionDocument document_from(const Partition& partition) {
    PartitionDocument doc;
    doc.skeleton = to_string(partition.spec.kind());
    doc.k = partition.spec.k();
    doc.modulus = partition.spec.modulus().value();
    doc.labeling = labeling_for(partition.spec);
    doc.tool = std::string(tool_name);
    doc.version = std::string(tool_version);
    doc.total_triangles = 0;

    for (const PartitionBlock& block : partition.blocks) {
        BlockSummary bs;
        for (const DifferenceCycle& dc : block.cycles) {
            bs.cycles.push_back(to_string(dc));
        }
        bs.triangles = static_cast<long long>(block.complex.triangles().size());
        doc.total_triangles += bs.triangles;
        for (const ComponentCertificate& comp : block.certificate.components) {
            ComponentSummary cs;
            cs.classification = to_string(comp.classification);
            cs.euler_characteristic = comp.euler_characteristic;
            cs.orientable = comp.orientable;
            cs.boundary_components = comp.boundary_components;
            cs.boundary_cycle_lengths = comp.boundary_cycle_lengths;
            cs.genus = comp.genus;
            cs.pseudomanifold = comp.is_pseudomanifold;
            cs.closed = comp.is_closed;
            cs.links_ok = comp.links_ok;
            cs.vertices = comp.vertex_count;
            cs.edges = comp.edge_count;
            cs.triangles = comp.triangle_count;
            bs.components.push_back(std::move(cs));
        }
        bs.shift_invariant = block.symmetry.shift_invariant;
        bs.vertex_set_full = block.symmetry.vertex_set_full;
        bs.vertex_transitive = block.symmetry.vertex_transitive;
        bs.symmetry_order = block.symmetry.order;

        const auto cls = block_class(block);
        doc.blocks_by_class[cls ? to_string(*cls) : "Mixed"] += 1;
        doc.blocks.push_back(std::move(bs));
    }
    return doc;
}

namespace {

json component_to_json(const ComponentSummary& cs) {
    json j;
    j["classification"] = cs.classification;
    j["euler_characteristic"] = cs.euler_characteristic;
    if (cs.orientable) {
        j["orientable"] = *cs.orientable;
    } else {
        j["orientable"] = nullptr;
    }
    j["boundary_components"] = cs.boundary_components;
    j["boundary_cycle_lengths"] = cs.boundary_cycle_lengths;
    if (cs.genus) {
        j["genus"] = *cs.genus;
    } else {
        j["genus"] = nullptr;
    }
    j["pseudomanifold"] = cs.pseudomanifold;
    j["closed"] = cs.closed;
    j["links_ok"] = cs.links_ok;
    j["vertices"] = cs.vertices;
    j["edges"] = cs.edges;
    j["triangles"] = cs.triangles;
    return j;
}

ComponentSummary component_from_json(const json& j) {
    ComponentSummary cs;
    cs.classification = j.at("classification").get<std::string>();
    cs.euler_characteristic = j.at("euler_characteristic").get<int>();
    if (!j.at("orientable").is_null()) {
        cs.orientable = j.at("orientable").get<bool>();
    }
    cs.boundary_components = j.at("boundary_components").get<int>();
    cs.boundary_cycle_lengths = j.at("boundary_cycle_lengths").get<std::vector<int>>();
    if (!j.at("genus").is_null()) {
        cs.genus = j.at("genus").get<int>();
    }
    cs.pseudomanifold = j.at("pseudomanifold").get<bool>();
    cs.closed = j.at("closed").get<bool>();
    cs.links_ok = j.at("links_ok").get<bool>();
    cs.vertices = j.at("vertices").get<int>();
    cs.edges = j.at("edges").get<int>();
    cs.triangles = j.at("triangles").get<int>();
    return cs;
}

} // namespace

std::string to_json(const PartitionDocument& doc) {
    json j;
    j["header"]["skeleton"] = doc.skeleton;
    j["header"]["k"] = doc.k;
    j["header"]["modulus"] = doc.modulus;
    j["header"]["labeling"] = doc.labeling;
    j["header"]["tool"] = doc.tool;
    j["header"]["version"] = doc.version;

    j["blocks"] = json::array();
    for (const BlockSummary& bs : doc.blocks) {
        json jb;
        jb["cycles"] = bs.cycles;
        jb["triangles"] = bs.triangles;
        jb["components"] = json::array();
        for (const ComponentSummary& cs : bs.components) {
            jb["components"].push_back(component_to_json(cs));
        }
        jb["symmetry"]["shift_invariant"] = bs.shift_invariant;
        jb["symmetry"]["vertex_set_full"] = bs.vertex_set_full;
        jb["symmetry"]["vertex_transitive"] = bs.vertex_transitive;
        jb["symmetry"]["order"] = bs.symmetry_order;
        j["blocks"].push_back(std::move(jb));
    }

    j["totals"]["triangles"] = doc.total_triangles;
    j["totals"]["blocks"] = static_cast<long long>(doc.blocks.size());
    j["totals"]["blocks_by_class"] = doc.blocks_by_class;

    return j.dump(2) + "\n";
}

PartitionDocument document_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        PartitionDocument doc;
        const json& header = j.at("header");
        doc.skeleton = header.at("skeleton").get<std::string>();
        doc.k = header.at("k").get<int>();
        doc.modulus = header.at("modulus").get<int>();
        doc.labeling = header.at("labeling").get<std::string>();
        doc.tool = header.at("tool").get<std::string>();
        doc.version = header.at("version").get<std::string>();
        for (const json& jb : j.at("blocks")) {
            BlockSummary bs;
            bs.cycles = jb.at("cycles").get<std::vector<std::string>>();
            bs.triangles = jb.at("triangles").get<long long>();
            for (const json& jc : jb.at("components")) {
                bs.components.push_back(component_from_json(jc));
            }
            const json& sym = jb.at("symmetry");
            bs.shift_invariant = sym.at("shift_invariant").get<bool>();
            bs.vertex_set_full = sym.at("vertex_set_full").get<bool>();
            bs.vertex_transitive = sym.at("vertex_transitive").get<bool>();
            bs.symmetry_order = sym.at("order").get<int>();
            doc.blocks.push_back(std::move(bs));
        }
        doc.total_triangles = j.at("totals").at("triangles").get<long long>();
        doc.blocks_by_class =
            j.at("totals").at("blocks_by_class").get<std::map<std::string, int>>();
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid partition document: ") + e.what());
    }
}

std::string to_table(const PartitionDocument& doc) {
    std::ostringstream os;
    os << doc.tool << " " << doc.version << "\n";
    os << "skeleton: " << (doc.skeleton == "cross" ? "cross polytope" : "simplex")
       << ", k = " << doc.k << "\n";
    os << "modulus: " << doc.modulus << "; " << doc.labeling << "\n";
    os << "triangles: " << doc.total_triangles << ", blocks: " << doc.blocks.size() << "\n";

    for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
        const BlockSummary& bs = doc.blocks[i];
        os << "\n";
        os << "block " << i + 1 << ":";
        for (const std::string& cyc : bs.cycles) {
            os << " " << cyc;
        }
        os << "\n";
        os << "  triangles: " << bs.triangles << "\n";
        for (std::size_t c = 0; c < bs.components.size(); ++c) {
            const ComponentSummary& cs = bs.components[c];
            os << "  component " << c + 1 << ": " << cs.classification
               << ", chi = " << cs.euler_characteristic;
            if (cs.orientable) {
                os << ", " << (*cs.orientable ? "orientable" : "nonorientable");
            }
            os << ", " << (cs.closed ? "closed" : "boundary circles: ");
            if (!cs.closed) {
                os << cs.boundary_components;
            }
            if (cs.genus) {
                os << ", genus " << *cs.genus;
            }
            os << ", V = " << cs.vertices << ", E = " << cs.edges << ", F = " << cs.triangles
               << "\n";
        }
        os << "  symmetry: Z_" << bs.symmetry_order << " "
           << (bs.shift_invariant ? "shift-invariant" : "NOT shift-invariant") << ", "
           << (bs.vertex_transitive ? "vertex transitive" : "NOT vertex transitive") << "\n";
    }

    os << "\n";
    os << "totals:";
    for (const auto& [cls, count] : doc.blocks_by_class) {
        os << " " << cls << ": " << count << ";";
    }
    os << " triangles: " << doc.total_triangles << "\n";
    return os.str();
}

std::vector<std::string> off_documents(const Partition& partition) {
    std::vector<std::string> out;
    const PartitionDocument doc = document_from(partition);
    for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
        const PartitionBlock& block = partition.blocks[i];
        const auto& verts = block.complex.vertices();
        std::map<int, int> index;
        for (std::size_t v = 0; v < verts.size(); ++v) {
            index[verts[v]] = static_cast<int>(v);
        }
        bool identity = true;
        for (std::size_t v = 0; v < verts.size(); ++v) {
            if (verts[v] != static_cast<int>(v)) {
                identity = false;
            }
        }
        std::ostringstream os;
        os << "OFF\n";
        os << "# " << doc.tool << " " << doc.version << ", " << doc.skeleton
           << " k = " << doc.k << ", block " << i + 1 << ":";
        for (const DifferenceCycle& dc : block.cycles) {
            os << " " << to_string(dc);
        }
        os << "\n";
        os << "# combinatorial facet list, no coordinates; vertices are residues of Z_"
           << doc.modulus << "\n";
        if (!identity) {
            os << "# vertex -> residue:";
            for (std::size_t v = 0; v < verts.size(); ++v) {
                os << " " << v << "=" << verts[v];
            }
            os << "\n";
        }
        os << verts.size() << " " << block.complex.triangles().size() << " "
           << block.complex.edges().size() << "\n";
        for (const Triangle& t : block.complex.triangles()) {
            os << "3 " << index[t.v[0]] << " " << index[t.v[1]] << " " << index[t.v[2]] << "\n";
        }
        out.push_back(os.str());
    }
    return out;
}

ParsedPartitionInput parse_partition_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    std::string skeleton;
    int k = 0;
    json jblocks;
    try {
        if (j.contains("header")) {
            skeleton = j.at("header").at("skeleton").get<std::string>();
            k = j.at("header").at("k").get<int>();
            jblocks = j.at("blocks");
        } else {
            skeleton = j.at("skeleton").get<std::string>();
            k = j.at("k").get<int>();
            jblocks = j.at("blocks");
        }
        if (!jblocks.is_array()) {
            throw ParseError("\"blocks\" must be an array");
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid partition input: ") + e.what());
    }

    if (skeleton != "cross" && skeleton != "simplex") {
        throw ParseError("unknown skeleton kind '" + skeleton + "', expected cross or simplex");
    }
    const SkeletonSpec spec = skeleton == "cross" ? SkeletonSpec::cross_polytope(k)
                                                  : SkeletonSpec::simplex(k);

    std::vector<std::vector<DifferenceCycle>> blocks;
    try {
        for (const json& jb : jblocks) {
            const json& jcycles =
                jb.is_object() ? jb.at("cycles") : jb; // document block vs bare list
            if (!jcycles.is_array()) {
                throw ParseError("each block must list its cycles as an array");
            }
            std::vector<DifferenceCycle> cycles;
            for (const json& jc : jcycles) {
                if (!jc.is_string()) {
                    throw ParseError(
                        "difference cycles must be strings in (a : b : c) notation");
                }
                cycles.push_back(parse_difference_cycle(jc.get<std::string>()));
            }
            blocks.push_back(std::move(cycles));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid partition input: ") + e.what());
    }
    return ParsedPartitionInput{spec, std::move(blocks)};
}

} // namespace xpoly
