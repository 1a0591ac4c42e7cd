#include <gtest/gtest.h>
#include <httplib.h>

#include <array>
#include <cstdio>
#include <random>
#include <thread>

#include "peerlens/service.hpp"

using namespace peerlens;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::filesystem::path& data_dir, const std::string& args) {
    const std::string cmd = std::string(PEERLENS_CLI) + " --data-dir '" + data_dir.string() + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() / ("peerlens-cli-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, CommandsAgreeWithTheApi) {
    auto demo = run_cli(dir_, "demo --students 8 --seed 3");
    ASSERT_EQ(demo.status, 0) << demo.out;

    service::StudyService svc(dir_);
    httplib::Server server;
    service::mount_api(server, svc);
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);

    auto exported = run_cli(dir_, "export study-0001 friends --format pajek");
    EXPECT_EQ(exported.status, 0);
    auto endpoint = client.Get("/studies/study-0001/export/friends.net");
    ASSERT_TRUE(endpoint);
    EXPECT_EQ(exported.out, endpoint->body);

    auto csv = run_cli(dir_, "export study-0001 consumption --format csv");
    EXPECT_EQ(csv.out, client.Get("/studies/study-0001/export/consumption.csv")->body);

    auto analyzed = run_cli(dir_, "analyze study-0001");
    EXPECT_EQ(analyzed.status, 0);
    auto graph = study::json::parse(client.Get("/studies/study-0001/graphs/partners")->body);
    char density[32];
    std::snprintf(density, sizeof density, "%.4f", graph.at("annotations").at("density").get<double>());
    EXPECT_NE(analyzed.out.find(density), std::string::npos) << analyzed.out;

    const auto s = svc.get("study-0001");
    const auto& person = s->latest()->individuals.front();
    auto report = run_cli(dir_, "report study-0001 " + person.profile.pseudonym);
    EXPECT_EQ(report.status, 0);
    EXPECT_EQ(report.out, person.report.friendship_paragraph + "\n\n" + person.report.consumption_paragraph + "\n");

    server.stop();
    thread.join();
}

TEST_F(CliTest, FailuresExitNonZero) {
    EXPECT_NE(run_cli(dir_, "analyze study-0404").status, 0);
    auto created = run_cli(dir_, "study new --title Draft");
    EXPECT_EQ(created.out, "study-0001\n");
    EXPECT_NE(run_cli(dir_, "analyze study-0001").status, 0);
    EXPECT_NE(run_cli(dir_, "export study-0001 friends --format dot").status, 0);
    EXPECT_NE(run_cli(dir_, "report study-0001 Nobody").status, 0);
}
