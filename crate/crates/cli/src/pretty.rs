use ffharmonic::{FieldContext, GroupSpec, ScalarFunction};

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_owned()
    };
    let mut out = vec![line(headers.to_vec())];
    out.extend(
        rows.iter()
            .map(|r| line(r.iter().map(String::as_str).collect())),
    );
    out.join("\n")
}

pub fn element_label(spec: &GroupSpec, index: usize) -> String {
    let coords: Vec<String> = spec
        .element_at(index)
        .coords()
        .iter()
        .map(u32::to_string)
        .collect();
    format!("({})", coords.join(","))
}

pub fn function_table(f: &ScalarFunction, value_header: &str) -> String {
    let ctx = f.context();
    let rows: Vec<_> = (0..f.len())
        .map(|i| {
            vec![
                i.to_string(),
                element_label(f.spec(), i),
                ctx.display(f.get(i)),
            ]
        })
        .collect();
    table(&["#", "x", value_header], &rows)
}

pub fn context_header(ctx: &FieldContext) -> String {
    format!(
        "GF({}^{}), modulus {}",
        ctx.p(),
        ctx.degree(),
        ctx.display_modulus()
    )
}
