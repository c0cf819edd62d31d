import json
import shutil
import subprocess
import sys

import pytest

from vkminor import io
from vkminor.cli import main
from vkminor.generators import (complete_bipartite, complete_graph, cycle, split_h3, hd,
                                octahedron, petersen, simplex_boundary)
from vkminor.minors import verify_certificate


@pytest.fixture
def files(tmp_path):
    fixtures = {"h1": hd(1), "h2": hd(2), "h3": hd(3), "k4": complete_graph(4),
                "k5": complete_graph(5), "k33": complete_bipartite(3, 3), "pet": petersen(),
                "split": split_h3(), "oct": octahedron(), "s3": simplex_boundary(3),
                "c4": cycle(4)}
    out = {}
    for name, K in fixtures.items():
        out[name] = tmp_path / f"{name}.json"
        io.write_complex(out[name], K)
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_smith_exit_codes(files, capsys):
    assert run(capsys, "smith", "--complex", files["h2"], "--m", 3)[0] == 3
    assert run(capsys, "smith", "--complex", files["h1"], "--m", 1)[0] == 3
    code, out = run(capsys, "smith", "--complex", files["k4"], "--m", 3)
    assert code == 0 and json.loads(out)["witness_support"] is not None


def test_vk_exit_codes(files, capsys):
    assert run(capsys, "vk", "--complex", files["k5"], "--m", 2)[0] == 3
    assert run(capsys, "vk", "--complex", files["k33"], "--m", 2)[0] == 3
    code, out = run(capsys, "vk", "--complex", files["k4"], "--m", 2)
    data = json.loads(out)
    assert code == 0 and data["vanishes"] and data["parity"] == "symmetric"
    code, out = run(capsys, "vk", "--complex", files["k5"], "--m", 2, "--order", "4,2,0,1,3")
    assert code == 3 and json.loads(out)["vertex_order"] == [4, 2, 0, 1, 3]
    assert run(capsys, "vk", "--complex", files["k5"], "--m", 2, "--order", "0,1")[0] == 1


def test_find_minor_and_verify(files, capsys, tmp_path):
    cert = tmp_path / "cert.json"
    code, out = run(capsys, "find-minor", "--complex", files["split"], "--target", files["h3"],
                    "--out", cert)
    data = json.loads(out)
    assert code == 0 and len(data["certificate"]["steps"]) == 1
    assert "4-sphere" in data["note"]
    c = io.read_certificate(cert)
    assert verify_certificate(split_h3(), hd(3), c)
    assert run(capsys, "verify", "--complex", files["split"], "--target", files["h3"],
               "--certificate", cert)[0] == 0
    assert run(capsys, "verify", "--complex", files["pet"], "--target", files["h3"],
               "--certificate", cert)[0] == 3

    assert run(capsys, "find-minor", "--complex", files["pet"], "--target", files["k5"])[0] == 0
    code, out = run(capsys, "find-minor", "--complex", files["k4"], "--target", files["k5"])
    assert code == 5 and json.loads(out)["note"] == "proven absent"
    code, out = run(capsys, "find-minor", "--complex", files["pet"], "--target", files["k5"],
                    "--budget", 2)
    assert code == 4 and json.loads(out)["note"] == "not found within budget"


def test_edge_reports(files, capsys, tmp_path):
    code, out = run(capsys, "edge", "--complex", files["oct"], "--u", 0, "--v", 1)
    data = json.loads(out)
    assert code == 0
    assert data["admissible"] and data["link_condition"] and data["h_identity"]
    data = json.loads(run(capsys, "edge", "--complex", files["s3"], "--u", 0, "--v", 1)[1])
    assert data["link_condition"] is False
    data = json.loads(run(capsys, "edge", "--complex", files["c4"], "--u", 0, "--v", 2)[1])
    assert data["admissible"] is False and data["contracted"] is None
    forced = tmp_path / "forced.json"
    run(capsys, "edge", "--complex", files["c4"], "--u", 0, "--v", 2, "--force", "--out", forced)
    K, _ = io.read_complex(forced)
    assert K.f_vector() == [1, 3, 2]
    assert run(capsys, "edge", "--complex", files["c4"], "--u", 0, "--v", 9)[0] == 1


def test_gen_counts(capsys, tmp_path):
    code, out = run(capsys, "gen", "--name", "hd", "--d", 3)
    assert code == 0 and len(json.loads(out)["facets"]) == 35
    code, out = run(capsys, "gen", "--name", "cyclic", "--d", 4, "--n", 6)
    assert len(json.loads(out)["facets"]) == 9
    path = tmp_path / "st.json"
    run(capsys, "gen", "--name", "stellar_sphere", "--d", 2, "--n", 3, "--seed", 4, "--out", path)
    K, _ = io.read_complex(path)
    # every stellar move on a 2-sphere adds two triangles (Euler characteristic)
    assert len(K.facets) == 4 + 2 * 3
    assert run(capsys, "gen", "--name", "nonsense")[0] == 1


def test_sed_command(files, capsys, tmp_path):
    code, out = run(capsys, "sed", "--complex", files["oct"])
    assert code == 0 and json.loads(out)["tree"]["edge"]
    torus = tmp_path / "torus.json"
    run(capsys, "gen", "--name", "torus_7", "--out", torus)
    assert run(capsys, "sed", "--complex", torus)[0] == 3


def test_reports_are_deterministic(files, capsys):
    for argv in (["smith", "--complex", files["h2"], "--m", 3],
                 ["vk", "--complex", files["k4"], "--m", 2],
                 ["find-minor", "--complex", files["pet"], "--target", files["k5"]]):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


@pytest.mark.parametrize("content", ["not json", '{"facets": [[0, "x"]]}', '{"faces": []}',
                                     '{"facets": [[0, 0]]}'])
def test_malformed_input(tmp_path, capsys, content):
    bad = tmp_path / "bad.json"
    bad.write_text(content)
    assert main(["smith", "--complex", str(bad), "--m", "1"]) == 1
    assert "error" in capsys.readouterr().err


def test_missing_file_and_bad_args(tmp_path, capsys):
    assert main(["smith", "--complex", str(tmp_path / "nope.json"), "--m", "1"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["smith", "--m", "1"])
    assert exc.value.code == 1


def test_thread_variable(files, capsys, monkeypatch):
    monkeypatch.setenv("VKMINOR_THREADS", "0")
    assert run(capsys, "smith", "--complex", files["k4"], "--m", 1)[0] == 1
    monkeypatch.setenv("VKMINOR_THREADS", "8")
    assert run(capsys, "smith", "--complex", files["k4"], "--m", 1)[0] in (0, 3)


def test_console_script(files):
    exe = shutil.which("vkminor")
    cmd = [exe] if exe else [sys.executable, "-m", "vkminor.cli"]
    proc = subprocess.run(cmd + ["smith", "--complex", str(files["h1"]), "--m", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and json.loads(proc.stdout)["vanishes"] is False
