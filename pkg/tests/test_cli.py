import json

from affrep.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestWeightCommands:
    def test_dim(self, capsys):
        rc, out, _ = run(capsys, "dim", "--n", "3", "--lambda", "2,1,0")
        assert rc == 0
        assert out.splitlines() == ["8", "seed: 1729"]

    def test_dim_json_echoes_seed(self, capsys):
        rc, out, _ = run(capsys, "dim", "--n", "3", "--lambda", "2,1,0",
                         "--format", "json", "--seed", "7")
        assert rc == 0
        data = json.loads(out)
        assert data == {"dim": 8, "lambda": [2, 1, 0], "seed": 7}

    def test_tensor(self, capsys):
        rc, out, _ = run(capsys, "tensor", "--n", "3", "--a", "1,0,0", "--b", "1,0,0")
        assert rc == 0
        assert out.splitlines()[0] == "[1,1,0] + [2,0,0]"

    def test_pieri(self, capsys):
        rc, out, _ = run(capsys, "pieri", "--n", "3", "--lambda", "3,0,0", "--k", "1")
        assert rc == 0
        assert out.splitlines()[0] == "[3,1,0] + [4,0,0]"

    def test_dual(self, capsys):
        rc, out, _ = run(capsys, "dual", "--n", "4", "--lambda", "2,1,1,0")
        assert rc == 0
        assert out.splitlines()[0] == "[2,1,1,0]"

    def test_parse_error_names_token(self, capsys):
        rc, out, err = run(capsys, "dim", "--n", "3", "--lambda", "2,x,0")
        assert rc == 1
        assert "'x'" in err

    def test_missing_model_arguments(self, capsys):
        rc, _, err = run(capsys, "model", "sym-dual", "--n", "2")
        assert rc == 1
        assert "--l" in err

    def test_invalid_config_rejected(self, capsys):
        rc, _, err = run(capsys, "dim", "--n", "3", "--lambda", "1,0,0", "--trials", "0")
        assert rc == 1


class TestClassify:
    def test_bad_file(self, capsys, tmp_path):
        f = tmp_path / "rep.json"
        f.write_text(json.dumps({"n": 10, "summands": [{"lambda": [1, 1] + [0] * 8, "mult": 1}]}))
        rc, out, _ = run(capsys, "classify", str(f))
        assert rc == 0
        assert out.splitlines()[0] == "Bad"

    def test_good_by_list(self, capsys, tmp_path):
        f = tmp_path / "rep.json"
        f.write_text(json.dumps({"n": 3, "summands": [{"lambda": [3, 0, 0], "mult": 1}]}))
        rc, out, _ = run(capsys, "classify", str(f), "--format", "json")
        assert rc == 0
        data = json.loads(out)
        assert data["classification"] == "Good"
        assert "stabilizer" not in data

    def test_heuristic_includes_report(self, capsys, tmp_path):
        f = tmp_path / "rep.json"
        f.write_text(json.dumps({"n": 3, "summands": [{"lambda": [1, 0, 0], "mult": 3}]}))
        rc, out, _ = run(capsys, "classify", str(f), "--format", "json")
        data = json.loads(out)
        assert data["classification"] == "GoodHeuristic"
        assert data["stabilizer"]["stab_dim"] == 0


class TestModelAndFiltrate:
    def test_model_round_trip(self, capsys, tmp_path):
        out_file = tmp_path / "m.json"
        rc, _, _ = run(capsys, "model", "sym-dual", "--n", "2", "--l", "2",
                       "--out", str(out_file))
        assert rc == 0
        first = out_file.read_text()
        # feeding the file through the dual command twice reproduces it
        dual1 = tmp_path / "d1.json"
        dual2 = tmp_path / "d2.json"
        rc, _, _ = run(capsys, "model", "dual", "--in", str(out_file), "--out", str(dual1))
        assert rc == 0
        rc, _, _ = run(capsys, "model", "dual", "--in", str(dual1), "--out", str(dual2))
        assert rc == 0
        assert dual2.read_text() == first

    def test_tensor_model_files(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        t = tmp_path / "t.json"
        run(capsys, "model", "sl-only", "--n", "2", "--lambda", "1,0", "--out", str(a))
        run(capsys, "model", "sym-dual", "--n", "2", "--l", "1", "--out", str(b))
        rc, _, _ = run(capsys, "model", "tensor", "--a", str(a), "--b", str(b), "--out", str(t))
        assert rc == 0
        data = json.loads(t.read_text())
        assert data["N"] == 2 * 3
        rc, out, _ = run(capsys, "filtrate", str(t), "--format", "json")
        assert rc == 0
        assert json.loads(out)["chain_dims"] == [2, 6]

    def test_filtrate_canonical(self, capsys, tmp_path):
        f = tmp_path / "m.json"
        run(capsys, "model", "sym-dual", "--n", "2", "--l", "2", "--out", str(f))
        rc, out, _ = run(capsys, "filtrate", str(f), "--kind", "socle", "--format", "json")
        assert rc == 0
        data = json.loads(out)
        assert data["chain_dims"] == [1, 3, 6]
        assert data["checks"] == {"blocks": True, "duality": True, "embedding": True}
        assert [ms["summands"][0]["lambda"] for ms in data["layers"]] == [
            [0, 0], [1, 0], [2, 0],
        ]

    def test_filtrate_sl_only_single_layer(self, capsys, tmp_path):
        f = tmp_path / "adj.json"
        run(capsys, "model", "sl-only", "--n", "3", "--lambda", "2,1,0", "--out", str(f))
        rc, out, _ = run(capsys, "filtrate", str(f), "--kind", "radical", "--format", "json")
        assert rc == 0
        assert json.loads(out)["chain_dims"] == [8]

    def test_filtrate_rejects_broken_model(self, capsys, tmp_path):
        f = tmp_path / "m.json"
        run(capsys, "model", "sym-dual", "--n", "2", "--l", "1", "--out", str(f))
        data = json.loads(f.read_text())
        data["sl_gens"]["E_1_2"][0][1] = "17"
        f.write_text(json.dumps(data))
        rc, _, err = run(capsys, "filtrate", str(f))
        assert rc == 1
        assert "E_1_2" in err or "invariant" in err

    def test_model_cap(self, capsys):
        rc, _, err = run(capsys, "model", "sym-dual", "--n", "3", "--l", "4",
                         "--max-model-dim", "10")
        assert rc == 1
        assert "max_model_dim" in err

    def test_filtrate_bundled_example(self, capsys, tmp_path):
        from affrep import serialize as ser
        from affrep.gallery import cubic_top_submodel

        f = tmp_path / "example.json"
        f.write_text(ser.dumps(ser.model_to_json(cubic_top_submodel(3))))
        rc, out, _ = run(capsys, "filtrate", str(f), "--kind", "radical", "--format", "json")
        assert rc == 0
        data = json.loads(out)
        assert [ms["summands"] for ms in data["layers"]] == [
            [{"lambda": [1, 1, 0], "mult": 1}],
            [{"lambda": [2, 2, 0], "mult": 1}],
            [{"lambda": [1, 0, 0], "mult": 1}, {"lambda": [3, 3, 0], "mult": 1}],
        ]


class TestCheck2Step:
    def write_ext(self, tmp_path, n, S, Q, W=(), free=False):
        f = tmp_path / "ext.json"
        f.write_text(json.dumps({
            "n": n,
            "S": {"n": n, "summands": [{"lambda": list(w), "mult": m} for w, m in S]},
            "Q": {"n": n, "summands": [{"lambda": list(w), "mult": m} for w, m in Q]},
            "W": {"n": n, "summands": [{"lambda": list(w), "mult": m} for w, m in W]},
            "assume_generically_free": free,
        }))
        return f

    def test_b_instance_exit_0(self, capsys, tmp_path):
        f = self.write_ext(tmp_path, 3, [((1, 0, 0), 8)], [((0, 0, 0), 8)], free=True)
        rc, out, _ = run(capsys, "check2step", str(f))
        assert rc == 0
        assert "RationalByB" in out

    def test_exceptional_exit_2(self, capsys, tmp_path):
        f = self.write_ext(
            tmp_path, 10,
            [((1, 1, 1, 0, 0, 0, 0, 0, 0, 0), 1)],
            [((1, 1, 0, 0, 0, 0, 0, 0, 0, 0), 1)],
            free=True,
        )
        rc, out, _ = run(capsys, "check2step", str(f))
        assert rc == 2

    def test_not_free_exit_3(self, capsys, tmp_path):
        f = self.write_ext(tmp_path, 3, [((2, 0, 0), 1)], [((1, 0, 0), 1)])
        rc, out, _ = run(capsys, "check2step", str(f))
        assert rc == 3

    def test_structural_failure_exit_1(self, capsys, tmp_path):
        f = self.write_ext(tmp_path, 3, [((2, 0, 0), 1)], [((0, 0, 0), 1)])
        rc, _, err = run(capsys, "check2step", str(f))
        assert rc == 1
        assert "structural" in err


class TestEnumerate:
    def test_deterministic_byte_identical(self, capsys, tmp_path):
        a = tmp_path / "a.jsonl"
        b = tmp_path / "b.jsonl"
        rc, _, _ = run(capsys, "enumerate", "--n", "2", "--out", str(a))
        assert rc == 0
        rc, _, _ = run(capsys, "enumerate", "--n", "2", "--out", str(b))
        assert rc == 0
        assert a.read_bytes() == b.read_bytes()

    def test_summary_counts_match_lines(self, capsys, tmp_path):
        out_file = tmp_path / "cat.jsonl"
        rc, out, _ = run(capsys, "enumerate", "--n", "2", "--out", str(out_file))
        assert rc == 0
        lines = out_file.read_text().splitlines()
        summary = dict(
            line.split(": ") for line in out.splitlines() if ": " in line
        )
        assert int(summary["entries"]) == len(lines)

    def test_dim_s_cap(self, capsys, tmp_path):
        out_file = tmp_path / "cat.jsonl"
        rc, _, _ = run(capsys, "enumerate", "--n", "2", "--max-dim-s", "4",
                       "--out", str(out_file))
        assert rc == 0
        from affrep.schur import Weight, weyl_dim

        for line in out_file.read_text().splitlines():
            e = json.loads(line)
            dim_s = sum(
                s["mult"] * weyl_dim(Weight(2, tuple(s["lambda"])))
                for s in e["S"]["summands"]
            )
            assert dim_s <= 4

    def test_cap_violation_exit_1(self, capsys):
        rc, _, err = run(capsys, "enumerate", "--n", "3", "--max-trivials", "99")
        assert rc == 1
        assert "cap" in err
