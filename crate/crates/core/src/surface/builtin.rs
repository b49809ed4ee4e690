use super::{Surface, SurfaceError};

pub const BUILTIN_NAMES: [&str; 4] = ["triangle", "tetrahedron", "octahedron", "torus8"];

/// Named fixture surfaces.
pub fn builtin(name: &str) -> Result<Surface, SurfaceError> {
    match name {
        "triangle" => Ok(make(
            &["1", "2", "3"],
            &[("12", ["1", "2"]), ("13", ["1", "3"]), ("23", ["2", "3"])],
            &[("123", ["12", "23", "13"])],
        )),
        "tetrahedron" => Ok(make(
            &["A", "B", "C", "D"],
            &[
                ("AB", ["A", "B"]),
                ("AC", ["A", "C"]),
                ("AD", ["A", "D"]),
                ("BC", ["B", "C"]),
                ("BD", ["B", "D"]),
                ("CD", ["C", "D"]),
            ],
            &[
                ("1", ["AB", "BC", "AC"]),
                ("2", ["AB", "BD", "AD"]),
                ("3", ["AC", "CD", "AD"]),
                ("4", ["BC", "CD", "BD"]),
            ],
        )),
        // A and F are the poles, B C D E the equator in cyclic order.
        "octahedron" => Ok(make(
            &["A", "B", "C", "D", "E", "F"],
            &[
                ("AB", ["A", "B"]),
                ("AC", ["A", "C"]),
                ("AD", ["A", "D"]),
                ("AE", ["A", "E"]),
                ("BC", ["B", "C"]),
                ("CD", ["C", "D"]),
                ("DE", ["D", "E"]),
                ("BE", ["B", "E"]),
                ("BF", ["B", "F"]),
                ("CF", ["C", "F"]),
                ("DF", ["D", "F"]),
                ("EF", ["E", "F"]),
            ],
            &[
                ("1", ["AB", "BC", "AC"]),
                ("2", ["AC", "CD", "AD"]),
                ("3", ["AD", "DE", "AE"]),
                ("4", ["AE", "BE", "AB"]),
                ("5", ["BF", "BC", "CF"]),
                ("6", ["CF", "CD", "DF"]),
                ("7", ["DF", "DE", "EF"]),
                ("8", ["EF", "BE", "BF"]),
            ],
        )),
        "torus8" => Ok(make(
            &["A", "B", "C", "D"],
            &[
                ("a", ["A", "B"]),
                ("b", ["A", "B"]),
                ("c", ["A", "C"]),
                ("d", ["A", "C"]),
                ("e", ["A", "D"]),
                ("f", ["B", "D"]),
                ("g", ["A", "D"]),
                ("h", ["C", "D"]),
                ("i", ["A", "D"]),
                ("j", ["B", "D"]),
                ("k", ["A", "D"]),
                ("l", ["C", "D"]),
            ],
            &[
                ("1", ["c", "e", "l"]),
                ("2", ["a", "f", "e"]),
                ("3", ["b", "g", "f"]),
                ("4", ["c", "h", "g"]),
                ("5", ["d", "i", "h"]),
                ("6", ["b", "j", "i"]),
                ("7", ["a", "k", "j"]),
                ("8", ["d", "l", "k"]),
            ],
        )),
        other => Err(SurfaceError::UnknownBuiltin(other.to_string())),
    }
}

fn make(vertices: &[&str], edges: &[(&str, [&str; 2])], faces: &[(&str, [&str; 3])]) -> Surface {
    Surface::from_parts(
        vertices.iter().copied(),
        edges
            .iter()
            .map(|(id, ends)| (id.to_string(), ends.map(String::from))),
        faces
            .iter()
            .map(|(id, sides)| (id.to_string(), sides.map(String::from))),
    )
    .expect("builtin fixtures are well-formed")
}
