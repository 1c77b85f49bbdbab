#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <goppa/io.hpp>
#include <goppa/trace_goppa.hpp>

using namespace goppa;

TEST_CASE("matrix text round trip") {
    auto inst = TraceGoppaInstance::build(2, 1, 3);
    const MatrixFp& m = inst.code(CodeKind::Lg).parity();
    std::ostringstream os;
    write_matrix_text(os, m);
    std::istringstream is(os.str());
    MatrixFp back = read_matrix_text(is);
    CHECK(back == m);

    auto i27 = TraceGoppaInstance::build(3, 1, 3);
    const MatrixFp& m3 = i27.code(CodeKind::Mh).parity();
    std::ostringstream os3;
    write_matrix_text(os3, m3);
    std::istringstream is3(os3.str());
    CHECK(read_matrix_text(is3) == m3);
}

TEST_CASE("matrix text golden layout") {
    // 2x3 over F_2 with rows (1,0,0) and (0,1,1); most significant column
    // (index 2) is printed first
    MatrixFp m(2, 2, 3);
    m.set(0, 0, 1);
    m.set(1, 1, 1);
    m.set(1, 2, 1);
    std::ostringstream os;
    write_matrix_text(os, m);
    CHECK(os.str() == "3 2 2\n001\n110\n");
}

TEST_CASE("matrix export is stable across rebuilds") {
    auto a = TraceGoppaInstance::build(2, 2, 3);
    auto b = TraceGoppaInstance::build(2, 2, 3);
    std::ostringstream oa, ob;
    write_matrix_text(oa, a.code(CodeKind::Mh2).parity());
    write_matrix_text(ob, b.code(CodeKind::Mh2).parity());
    CHECK(oa.str() == ob.str());
}

TEST_CASE("matrix import rejects malformed input") {
    std::istringstream bad_header("x y z\n");
    CHECK_THROWS_AS(read_matrix_text(bad_header), std::invalid_argument);
    std::istringstream short_row("3 1 2\n01\n");
    CHECK_THROWS_AS(read_matrix_text(short_row), std::invalid_argument);
    std::istringstream bad_digit("3 1 2\n021\n");
    CHECK_THROWS_AS(read_matrix_text(bad_digit), std::invalid_argument);
    std::istringstream truncated("3 2 2\n010\n");
    CHECK_THROWS_AS(read_matrix_text(truncated), std::invalid_argument);
}

TEST_CASE("best known codes snapshot") {
    std::istringstream csv("n,k,d\n448,58,152\n48,1,48\n# comment\n18,1,18\n");
    BkcTable t = BkcTable::parse(csv);
    CHECK(t.size() == 3);
    auto rec = t.lookup(448, 58);
    REQUIRE(rec.has_value());
    CHECK(rec->d == 152);
    CHECK_FALSE(t.lookup(448, 57).has_value());
}
