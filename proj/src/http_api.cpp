#include <httplib.h>

#include "peerlens/graph_io.hpp"
#include "peerlens/service.hpp"

namespace peerlens::service {

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, const json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& message, const json& detail = nullptr) {
    json body{{"error", message}, {"status", status}};
    if (!detail.is_null()) body["report"] = detail;
    send(res, body, status);
}

json parse_body(const httplib::Request& req) {
    try {
        return json::parse(req.body);
    } catch (const json::parse_error& e) {
        throw ServiceError(ErrorKind::BadRequest, std::string("request body is not JSON: ") + e.what());
    }
}

json study_json(const study::Study& s) {
    json roster = json::array();
    for (const auto& r : s.roster) roster.push_back(codec::encode(r, false));
    json versions = json::array();
    for (const auto& r : s.results) versions.push_back(r.version);
    return {{"id", s.id},
            {"title", s.title},
            {"created", codec::encode(s.created)},
            {"seed", s.seed},
            {"status", study::to_string(s.status)},
            {"roster", std::move(roster)},
            {"answers", s.answers.size()},
            {"result_versions", std::move(versions)}};
}

const study::IndividualResult& individual(const study::AnalysisResults& r, const std::string& pid) {
    const auto* found = r.individual(pid);
    if (found == nullptr) throw ServiceError(ErrorKind::NotFound, "unknown individual '" + pid + "'");
    return *found;
}

const SocialGraph& graph(const study::AnalysisResults& r, const std::string& name) {
    const auto* g = r.graph(name);
    if (g == nullptr) throw ServiceError(ErrorKind::NotFound, "unknown graph '" + name + "'");
    return *g;
}

/// Runs a route body and maps the failure kinds onto status codes.
template <typename F>
httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
        try {
            f(req, res);
        } catch (const ServiceError& e) {
            send_error(res, e.http_status(), e.what(), e.detail());
        } catch (const codec::CodecError& e) {
            send_error(res, 400, e.what());
        } catch (const std::exception& e) {
            send_error(res, 500, e.what());
        }
    };
}

}  // namespace

void mount_api(httplib::Server& server, StudyService& service) {
    server.Post("/studies", guarded([&](const auto& req, auto& res) {
        const auto body = parse_body(req);
        std::optional<std::uint64_t> seed;
        if (body.contains("seed")) seed = body.at("seed").template get<std::uint64_t>();
        auto s = service.create(body.value("title", std::string()), seed);
        send(res, study_json(*s), 201);
    }));

    server.Get("/studies", guarded([&](const auto&, auto& res) {
        json out = json::array();
        for (const auto& s : service.list()) {
            out.push_back({{"id", s->id}, {"title", s->title}, {"status", study::to_string(s->status)}});
        }
        send(res, {{"studies", std::move(out)}});
    }));

    server.Get(R"(/studies/([^/]+))", guarded([&](const auto& req, auto& res) {
        send(res, study_json(*service.get(req.matches[1].str())));
    }));

    server.Post(R"(/studies/([^/]+)/roster)", guarded([&](const auto& req, auto& res) {
        auto s = service.import_roster(req.matches[1].str(), req.body);
        json roster = json::array();
        for (const auto& r : s->roster) roster.push_back(codec::encode(r, false));
        send(res, {{"study", s->id}, {"roster", std::move(roster)}});
    }));

    server.Get(R"(/studies/([^/]+)/questionnaire)", guarded([&](const auto& req, auto& res) {
        send(res, study::expanded_questionnaire(*service.get(req.matches[1].str())));
    }));

    server.Post(R"(/studies/([^/]+)/responses)", guarded([&](const auto& req, auto& res) {
        auto answers = codec::decode_answers(parse_body(req));
        auto report = service.add_responses(req.matches[1].str(), std::move(answers));
        send(res, {{"accepted", true}, {"report", codec::encode(report)}});
    }));

    server.Post(R"(/studies/([^/]+)/analyze)", guarded([&](const auto& req, auto& res) {
        auto s = service.analyze(req.matches[1].str());
        send(res, study::summary(*s, *s->latest()));
    }));

    server.Get(R"(/studies/([^/]+)/graphs)", guarded([&](const auto& req, auto& res) {
        auto s = service.get(req.matches[1].str());
        json names = json::array();
        for (const auto& g : require_results(*s).graphs) names.push_back(g.name());
        send(res, {{"graphs", std::move(names)}});
    }));

    server.Get(R"(/studies/([^/]+)/graphs/([^/]+))", guarded([&](const auto& req, auto& res) {
        auto s = service.get(req.matches[1].str());
        send(res, codec::encode(graph(require_results(*s), req.matches[2].str())));
    }));

    server.Get(R"(/studies/([^/]+)/individuals/([^/]+))", guarded([&](const auto& req, auto& res) {
        auto s = service.get(req.matches[1].str());
        send(res, study::encode(individual(require_results(*s), req.matches[2].str())));
    }));

    server.Get(R"(/studies/([^/]+)/individuals/([^/]+)/(mediators|influencers))", guarded([&](const auto& req, auto& res) {
        auto s = service.get(req.matches[1].str());
        const auto& person = individual(require_results(*s), req.matches[2].str());
        json list = json::array();
        if (req.matches[3] == "mediators") {
            for (const auto& m : person.mediators) list.push_back(codec::encode(m));
        } else {
            for (const auto& i : person.influencers) list.push_back(codec::encode(i));
        }
        send(res, {{"person", person.profile.id}, {"pseudonym", person.profile.pseudonym}, {req.matches[3].str(), list}});
    }));

    server.Get(R"(/studies/([^/]+)/export/([^/]+)\.(net|csv))", guarded([&](const auto& req, auto& res) {
        auto s = service.get(req.matches[1].str());
        const auto& g = graph(require_results(*s), req.matches[2].str());
        if (req.matches[3] == "net") {
            res.set_content(export_pajek(g), "text/plain");
        } else {
            res.set_content(export_edge_csv(g), "text/csv");
        }
    }));
}

bool serve(StudyService& service, const std::string& host, int port, const std::optional<std::filesystem::path>& ui_dir) {
    httplib::Server server;
    mount_api(server, service);
    if (ui_dir && std::filesystem::is_directory(*ui_dir)) server.set_mount_point("/", ui_dir->string());
    return server.listen(host, port);
}

}  // namespace peerlens::service
