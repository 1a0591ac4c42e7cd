#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "peerlens/graph_io.hpp"
#include "peerlens/service.hpp"
#include "peerlens/synthetic.hpp"

using namespace peerlens;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_summary(const study::json& s) {
    std::cout << "study " << s.at("study").get<std::string>() << ", results version " << s.at("version") << ": "
              << s.at("students") << " students, " << s.at("facts") << " facts (" << s.at("derived_facts")
              << " derived)\n";
    std::printf("%-14s %6s %6s %10s %9s\n", "graph", "nodes", "ties", "density", "diameter");
    for (const auto& g : s.at("graphs")) {
        auto number = [](const study::json& v, const char* fmt) {
            if (v.is_null()) return std::string("-");
            char buf[32];
            std::snprintf(buf, sizeof buf, fmt, v.get<double>());
            return std::string(buf);
        };
        std::printf("%-14s %6zu %6zu %10s %9s\n", g.at("name").get<std::string>().c_str(), g.at("nodes").get<std::size_t>(),
                    g.at("ties").get<std::size_t>(), number(g.at("density"), "%.4f").c_str(),
                    number(g.at("diameter"), "%.0f").c_str());
    }
    if (s.at("missing_items").get<std::size_t>() > 0) {
        std::cout << s.at("missing_items") << " items unanswered; the affected instruments were not scored\n";
    }
}

void print_report(const study::IndividualResult& r) {
    std::cout << r.report.friendship_paragraph << "\n\n" << r.report.consumption_paragraph << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classroom social network and alcohol-use risk profiles"};
    app.require_subcommand(1);
    std::string data_dir = study::default_data_dir().string();
    app.add_option("--data-dir", data_dir, "Directory holding the study bundles (env PEERLENS_DATA_DIR)");

    auto* study_cmd = app.add_subcommand("study", "Manage studies");
    study_cmd->require_subcommand(1);
    auto* study_new = study_cmd->add_subcommand("new", "Create a study");
    std::string title;
    std::optional<std::uint64_t> seed;
    study_new->add_option("--title", title, "Study title")->required();
    study_new->add_option("--seed", seed, "Pseudonym seed (defaults to a hash of the study id)");
    auto* study_list = study_cmd->add_subcommand("list", "List studies");

    std::string study_id;
    std::string input;
    auto* roster_cmd = app.add_subcommand("roster", "Roster commands");
    roster_cmd->require_subcommand(1);
    auto* roster_import = roster_cmd->add_subcommand("import", "Import a roster CSV");
    roster_import->add_option("study", study_id)->required();
    roster_import->add_option("csv", input)->required()->check(CLI::ExistingFile);

    auto* responses_cmd = app.add_subcommand("responses", "Response commands");
    responses_cmd->require_subcommand(1);
    auto* responses_import = responses_cmd->add_subcommand("import", "Import a JSON array of answer records");
    responses_import->add_option("study", study_id)->required();
    responses_import->add_option("json", input)->required()->check(CLI::ExistingFile);

    auto* analyze_cmd = app.add_subcommand("analyze", "Run the analysis pipeline");
    analyze_cmd->add_option("study", study_id)->required();

    auto* export_cmd = app.add_subcommand("export", "Export a graph");
    std::string graph_name;
    std::string format = "pajek";
    std::string output;
    export_cmd->add_option("study", study_id)->required();
    export_cmd->add_option("graph", graph_name)->required();
    export_cmd->add_option("--format", format)->check(CLI::IsMember({"pajek", "csv"}));
    export_cmd->add_option("-o,--output", output, "Write to a file instead of stdout");

    auto* report_cmd = app.add_subcommand("report", "Print the report of one student");
    std::string who;
    report_cmd->add_option("study", study_id)->required();
    report_cmd->add_option("pseudonym", who, "Pseudonym or roster id")->required();

    auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API and the UI assets");
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string ui_dir = "web/dist";
    serve_cmd->add_option("--port", port);
    serve_cmd->add_option("--host", host);
    serve_cmd->add_option("--ui-dir", ui_dir, "Built UI assets, mounted at / when present");

    auto* demo_cmd = app.add_subcommand("demo", "Create and analyze a synthetic classroom");
    std::size_t students = 38;
    std::uint64_t demo_seed = 1;
    demo_cmd->add_option("--students", students)->check(CLI::Range(2, 500));
    demo_cmd->add_option("--seed", demo_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        service::StudyService svc(data_dir);
        if (study_new->parsed()) {
            std::cout << svc.create(title, seed)->id << "\n";
        } else if (study_list->parsed()) {
            for (const auto& s : svc.list()) std::cout << s->id << "\t" << study::to_string(s->status) << "\t" << s->title << "\n";
        } else if (roster_import->parsed()) {
            for (const auto& r : svc.import_roster(study_id, read_file(input))->roster) {
                std::cout << r.id << "\t" << r.pseudonym << "\n";
            }
        } else if (responses_import->parsed()) {
            auto answers = codec::decode_answers(study::json::parse(read_file(input)));
            auto report = svc.add_responses(study_id, std::move(answers));
            std::cout << "accepted; " << report.missing_respondents.size() << " respondents and "
                      << report.missing_items.size() << " items still missing\n";
        } else if (analyze_cmd->parsed()) {
            auto s = svc.analyze(study_id);
            print_summary(study::summary(*s, *s->latest()));
        } else if (export_cmd->parsed()) {
            const auto& results = service::require_results(*svc.get(study_id));
            const auto* g = results.graph(graph_name);
            if (g == nullptr) throw std::runtime_error("unknown graph '" + graph_name + "'");
            const auto text = format == "pajek" ? export_pajek(*g) : export_edge_csv(*g);
            if (output.empty()) {
                std::cout << text;
            } else {
                study::write_atomically(output, text);
            }
        } else if (report_cmd->parsed()) {
            const auto* r = service::require_results(*svc.get(study_id)).individual(who);
            if (r == nullptr) throw std::runtime_error("no student '" + who + "' in " + study_id);
            print_report(*r);
        } else if (serve_cmd->parsed()) {
            std::cout << "listening on http://" << host << ":" << port << "\n" << std::flush;
            if (!service::serve(svc, host, port, std::filesystem::path(ui_dir))) {
                throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
            }
        } else if (demo_cmd->parsed()) {
            auto s = svc.create("Synthetic classroom of " + std::to_string(students), demo_seed);
            std::string csv = "full_name,age,gender,class\n";
            for (const auto& r : synthetic::make_roster(students, demo_seed)) {
                csv += csv_quote(r.full_name) + "," + std::to_string(r.age.value_or(0)) + "," + r.gender + "," +
                       r.class_name + "\n";
            }
            s = svc.import_roster(s->id, csv);
            const survey::QuestionnaireEvent event{s->questionnaire.id, service::today()};
            svc.add_responses(s->id, synthetic::make_answers(s->roster, s->questionnaire, demo_seed, event));
            s = svc.analyze(s->id);
            print_summary(study::summary(*s, *s->latest()));
        }
    } catch (const service::ServiceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.detail().is_null()) std::cerr << e.detail().dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
