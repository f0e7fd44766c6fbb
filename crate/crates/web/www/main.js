import init, { classify, tor, pi0, snf } from "./pkg/homz_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, text, cls) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  if (cls) e.className = cls;
  return e;
}

function table(head, rows) {
  const t = el("table");
  const tr = el("tr");
  head.forEach((h) => tr.appendChild(el("th", h)));
  t.appendChild(tr);
  for (const r of rows) {
    const row = el("tr");
    r.forEach((c) => row.appendChild(el("td", String(c))));
    t.appendChild(row);
  }
  return t;
}

// errors arrive as JSON strings; parse errors carry a character position
function showError(out, input, err) {
  let msg = String(err);
  try {
    const e = JSON.parse(err);
    msg = e.error;
    if (e.position !== undefined && input !== undefined) {
      msg += "\n" + input + "\n" + " ".repeat(e.position) + "^";
    }
  } catch (_) {}
  out.replaceChildren(el("div", msg, "error"));
}

function run(out, input, f) {
  try {
    out.replaceChildren(...f());
  } catch (err) {
    showError(out, input, err);
  }
}

function matrix(m) {
  return m.map((row) => row.join("\t")).join("\n");
}

function wire() {
  $("classify-go").onclick = () => {
    const input = $("classify-in").value;
    run($("classify-out"), input, () => {
      const r = JSON.parse(classify(input));
      return [
        el("p", `≅ ${r.literal}`),
        el("p", `invariant factors [${r.invariant_factors.join(", ")}], free rank ${r.free_rank}, order ${r.order ?? "∞"}`, "hint"),
      ];
    });
  };

  $("tor-go").onclick = () => {
    const a = $("tor-a").value, b = $("tor-b").value;
    run($("tor-out"), undefined, () => {
      const r = JSON.parse(tor(a, b, Number($("tor-n").value)));
      return [table(["n", `Tor_n(${r.A}, ${r.B})`], r.results.map((x) => [x.n, x.literal]))];
    });
  };

  $("pi0-go").onclick = () => {
    const a = $("pi0-a").value, b = $("pi0-b").value;
    const out = $("pi0-out");
    out.replaceChildren(el("p", "enumerating…", "hint"));
    // let the message paint before the blocking call
    setTimeout(() => run(out, undefined, () => {
      const r = JSON.parse(pi0(a, b, Number($("pi0-r").value)));
      const g = r.componentGroup ? ` ≅ ${groupLiteral(r.componentGroup)}` : "";
      return [
        el("p", `${r.objectCount} objects, ${r.edgeCount} morphism pairs, ${r.componentCount} components${g}; χ̄ bijective: ${r.bijection}`),
        table(["representative", "objects", "χ"], r.components.map((c) => [c.representative, c.size, `(${c.chi.join(", ")})`])),
      ];
    }), 10);
  };

  $("snf-go").onclick = () => {
    const input = $("snf-in").value;
    run($("snf-out"), undefined, () => {
      const r = JSON.parse(snf(input));
      return [
        el("p", `rank ${r.rank}, diagonal [${r.diagonal.join(", ")}]`),
        el("pre", `U =\n${matrix(r.U)}\n\nD = U·A·V =\n${matrix(r.D)}\n\nV =\n${matrix(r.V)}`),
      ];
    });
  };
}

function groupLiteral(c) {
  const parts = [];
  if (c.free_rank === 1) parts.push("Z");
  else if (c.free_rank > 1) parts.push(`Z^${c.free_rank}`);
  c.invariant_factors.forEach((d) => parts.push(`Z/${d}`));
  return parts.length ? parts.join(" + ") : "0";
}

init().then(wire);
