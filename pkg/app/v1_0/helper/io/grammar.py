GRAMMAR = r"""
start: (_NL | command _NL)*

?command: "axiom" NAME ":" term                  -> axiom
        | "var" NAME ":" term                    -> var
        | "def" NAME ":" term ":=" term          -> definition
        | "hyp" NAME ":" term EQOP term          -> hyp
        | "subsingleton" term "by" term          -> subsingleton
        | "goal" term EQOP term                  -> goal

?term: "Pi" binder+ "," term                     -> pi
     | "fun" binder+ "," term                    -> lam
     | arrow

?arrow: app _ARROW term                          -> function_type
      | app

?app: app atom                                   -> application
    | atom

?atom: NAME                                      -> name
     | "Type"                                    -> sort
     | "(" term ")"

binder: "(" NAME+ ":" term ")"

EQOP: "==" | "="
_ARROW: "->" | "→"
NAME: /[^\W\d][\w']*/
_NL: /(\r?\n)+/
COMMENT: /#[^\n]*/

%ignore /[ \t\f]+/
%ignore COMMENT
"""
