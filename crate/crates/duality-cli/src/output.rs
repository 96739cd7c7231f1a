//! Byte-stable renderings: CSV for the tables, JSON with a versioned
//! schema, DOT for graphs. The symbol alphabet (digits, commas, signs,
//! single letters) needs no quoting or escaping anywhere.

use duality_core::catalog::{SignTable, TABLE_LABELS};
use duality_core::graph::LabeledGraph;
use duality_core::theta::{ParamVector, Tensor};

pub fn csv_action_table(table: &SignTable) -> String {
    let mut out = String::from("partition");
    for l in TABLE_LABELS {
        out.push(',');
        out.push(l);
    }
    out.push('\n');
    for (row, cells) in table.rows.iter().zip(table.cells.iter()) {
        out.push_str(&row.to_text());
        for &s in cells {
            out.push(',');
            out.push(if s > 0 { '+' } else { '-' });
        }
        out.push('\n');
    }
    out
}

pub fn json_action_table(table: &SignTable) -> String {
    let mut out = String::from("{\"schema\":1,\"table\":\"action\",\"columns\":[");
    for (i, l) in TABLE_LABELS.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("\"{l}\""));
    }
    out.push_str("],\"rows\":[");
    for (i, (row, cells)) in table.rows.iter().zip(table.cells.iter()).enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"partition\":\"{}\",\"signs\":[",
            row.to_text()
        ));
        for (j, &s) in cells.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(if s > 0 { "\"+\"" } else { "\"-\"" });
        }
        out.push_str("]}");
    }
    out.push_str("]}\n");
    out
}

/// Full square multiplication table, `I` on the diagonal.
pub fn csv_mult_table(table: &[Vec<char>]) -> String {
    let mut out = String::from("label");
    for l in TABLE_LABELS {
        out.push(',');
        out.push(l);
    }
    out.push('\n');
    for (r, row) in table.iter().enumerate() {
        out.push(TABLE_LABELS[r]);
        for &cell in row {
            out.push(',');
            out.push(cell);
        }
        out.push('\n');
    }
    out
}

pub fn json_mult_table(table: &[Vec<char>]) -> String {
    let mut out = String::from("{\"schema\":1,\"table\":\"mult\",\"labels\":[");
    for (i, l) in TABLE_LABELS.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("\"{l}\""));
    }
    out.push_str("],\"rows\":[");
    for (r, row) in table.iter().enumerate() {
        if r > 0 {
            out.push(',');
        }
        out.push('[');
        for (c, &cell) in row.iter().enumerate() {
            if c > 0 {
                out.push(',');
            }
            out.push_str(&format!("\"{cell}\""));
        }
        out.push(']');
    }
    out.push_str("]}\n");
    out
}

/// Undirected DOT with all vertices declared and edges in index order.
pub fn dot_graph(name: &str, graph: &LabeledGraph) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..=graph.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (i, j) in graph.edges() {
        out.push_str(&format!("  {i} -- {j};\n"));
    }
    out.push_str("}\n");
    out
}

fn json_tensor(tensor: &Tensor) -> String {
    // Nested arrays in canonical axis order.
    fn rec(shape: &[usize], data: &[i64], out: &mut String) {
        if shape.is_empty() {
            out.push_str(&data[0].to_string());
            return;
        }
        let stride: usize = shape[1..].iter().product();
        out.push('[');
        for i in 0..shape[0] {
            if i > 0 {
                out.push(',');
            }
            rec(&shape[1..], &data[i * stride..(i + 1) * stride], out);
        }
        out.push(']');
    }
    let mut out = String::new();
    rec(tensor.shape(), tensor.data(), &mut out);
    out
}

/// Parameter vector as a JSON object keyed by partition text.
pub fn json_param_vector(phi: &ParamVector) -> String {
    let mut out = String::from("{");
    for (i, (p, t)) in phi.components().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("\"{}\":{}", p.to_text(), json_tensor(t)));
    }
    out.push('}');
    out
}
